# vim: set et sw=4 sts=4 fileencoding=utf-8:
#
# Copyright (c) 2026 The warpflow developers
# All rights reserved.
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in
# all copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
# SOFTWARE.

"""
This module represents a star-shaped hypersurface as a radial graph
``r = ρ(x)`` over a :class:`~warpflow.sphere.SphereGrid` and computes the
extrinsic geometry of one time slice.

The :func:`compute_geometry` function is the major element that this module
provides; it returns a :class:`GeometrySnapshot` holding every nodal quantity
(support function u, mean curvature H, |A|², σ₂, area element, flow speed)
and the integral diagnostics derived from them. The outward unit normal is
used throughout, so leaves have H > 0.


Classes
=======

.. autoclass:: RadialGraph
   :members:

.. autoclass:: GeometrySnapshot
   :members:


Functions
=========

.. autofunction:: leaf_graph

.. autofunction:: fourier_graph

.. autofunction:: random_fourier_graph

.. autofunction:: offcenter_circle

.. autofunction:: compute_geometry

.. autofunction:: enclosed_volume

.. autofunction:: surface_area

.. autofunction:: minkowski_residuals

.. autofunction:: decay_quantities


Exceptions
==========

.. autoexception:: GeometryError

.. autoexception:: StarShapeError


Examples
========

The curvature of an off-center circle in the plane::

    from warpflow import ambient, sphere, hypersurface

    space = ambient.AmbientSpace(ambient.EuclideanProfile(), n=1)
    grid = sphere.SphereGrid(1, 256)
    graph = hypersurface.offcenter_circle(grid, a=0.5, R=2.0)
    snap = hypersurface.compute_geometry(space, graph)
    print(snap.H.min(), snap.H.max(), snap.A)
"""

import math
import logging
from collections import namedtuple

import numpy as np

from . import sphere
from .ambient import DomainError, ricci_along, radial_integral
from .exc import WarpflowError


#: Spread below which a graph is treated as an exact leaf
LEAF_SNAP = 1e-14

SnapshotRow = namedtuple('SnapshotRow', ('angle', 'rho', 'u', 'H', 'A2', 'f'))
Residuals = namedtuple('Residuals', ('res1', 'res2'))
Decay = namedtuple('Decay', ('eta_max', 'omega_max', 'deficit'))


class GeometryError(WarpflowError):
    """
    Base class for errors in the geometry of a radial graph.
    """


class StarShapeError(GeometryError):
    """
    Raised when the support function is not positive at some node.

    :param str message: The error message
    :param int node: The index of the offending node
    """
    def __init__(self, message, node=None):
        self.node = node
        super(StarShapeError, self).__init__(message)


class RadialGraph(object):
    """
    A hypersurface given as the radial graph of the nodal radii *rho* over
    *grid*.

    :param SphereGrid grid: The reference grid
    :param rho: The radius at each node
    """

    def __init__(self, grid, rho):
        rho = np.array(rho, dtype=float)
        if rho.shape != (grid.size,):
            raise ValueError('expected %d radii, got shape %r' % (
                grid.size, rho.shape))
        self.grid = grid
        self.rho = rho

    def __repr__(self):
        return '<RadialGraph N=%d rho=[%g, %g]>' % (
            self.grid.size, self.rho.min(), self.rho.max())

    @property
    def is_leaf(self):
        """
        True if every node has exactly the same radius.
        """
        return bool(np.all(self.rho == self.rho[0]))

    def snapped(self):
        """
        Return the graph, replaced by the leaf at its mean radius if its
        spread does not exceed 1e-14.
        """
        if 0 < np.ptp(self.rho) <= LEAF_SNAP:
            return RadialGraph(self.grid, np.full(
                self.grid.size, math.fsum(self.rho) / self.grid.size))
        return self

    def validate(self, space):
        """
        Check that every radius lies strictly inside the profile domain.

        :raises DomainError: naming the first offending node
        """
        rho = self.rho
        bad = np.flatnonzero(
            ~((rho > space.r_lo) & (rho < space.r_hi)))
        if bad.size:
            i = bad[0]
            raise DomainError(
                'graph leaves the profile domain at node %d (rho=%.17g)' % (
                    i, rho[i]), radius=float(rho[i]))

    def resampled(self, grid):
        """
        Return the graph spectrally resampled onto *grid*.
        """
        return RadialGraph(grid, sphere.resample(self.grid, self.rho, grid))


def leaf_graph(grid, radius):
    """
    Return the leaf S(*radius*) as a radial graph.
    """
    return RadialGraph(grid, np.full(grid.size, float(radius)))


def fourier_graph(grid, mean, modes=()):
    """
    Return the graph ``ρ = mean + Σ a·cos(kθ + phase)`` for each
    ``(k, a, phase)`` in *modes*. For n = 2 the angle is the polar angle ϑ and
    the phase must be zero (the graph must be even across the poles).
    """
    rho = np.full(grid.size, float(mean))
    for k, amplitude, phase in modes:
        if grid.n == 2 and phase != 0:
            raise ValueError('axisymmetric modes cannot carry a phase')
        rho += amplitude * np.cos(k * grid.angles + phase)
    return RadialGraph(grid, rho)


def random_fourier_graph(grid, mean, count, amplitude, rng, r_lo=0.0):
    """
    Return a :func:`fourier_graph` with *count* modes of wavenumbers
    2 .. count+1 and random amplitudes (and, for n = 1, phases) drawn from the
    :class:`numpy.random.Generator` *rng*. The amplitudes are scaled so that
    their total does not exceed ``amplitude × (mean − r_lo)``, keeping the
    graph above r_lo.
    """
    # pylint: disable=too-many-arguments
    weights = rng.uniform(-1.0, 1.0, count)
    phases = rng.uniform(0.0, 2 * math.pi, count)
    bound = amplitude * (mean - r_lo)
    weights *= bound / max(np.abs(weights).sum(), 1e-300)
    modes = [
        (k + 2, float(a), float(p) if grid.n == 1 else 0.0)
        for k, (a, p) in enumerate(zip(weights, phases))]
    return fourier_graph(grid, mean, modes)


def offcenter_circle(grid, a, R):
    """
    Return the Euclidean circle of radius *R* centred at distance *a* from
    the origin along θ = 0: ``ρ(θ) = a·cos θ + √(R² − a²·sin²θ)``. Only
    defined for n = 1 and ``|a| < R``.
    """
    if grid.n != 1:
        raise ValueError('off-center circles are only defined for n = 1')
    if not abs(a) < R:
        raise ValueError('the circle must enclose the origin (|a| < R)')
    theta = grid.angles
    return RadialGraph(
        grid, a * np.cos(theta) + np.sqrt(R * R - (a * np.sin(theta)) ** 2))


class GeometrySnapshot(object):
    """
    All extrinsic geometry of one time slice of a radial graph.

    Nodal arrays: ``rho``, ``w``, ``phi`` (w′), ``grad_sq`` (|∇̃ρ|²), ``v``,
    ``u``, ``H``, ``A2`` (|A|²), ``sigma2`` (n = 2 only, otherwise None),
    ``dmu`` (area density wⁿv, integrated with
    :func:`~warpflow.sphere.integrate`), ``f`` (flow speed nφ − uH), ``eta``
    and ``omega``.

    Scalars: ``V`` (enclosed volume above ``r_inner``), ``A`` (area),
    ``res1``/``res2`` (normalized Minkowski residuals, ``res2`` None for
    n = 1), ``eta_max``, ``omega_max``, ``deficit``, ``maxH``, ``min_u``,
    ``c0_min``/``c0_max`` (extremes of (w/w′)², NaN where w′ ≤ 0) and
    ``max_speed``.
    """
    # pylint: disable=too-many-instance-attributes,too-few-public-methods

    def __init__(self, space, graph, r_inner):
        self.space = space
        self.graph = graph
        self.grid = graph.grid
        self.r_inner = r_inner

    def rows(self):
        """
        Yield a :data:`SnapshotRow` (angle, rho, u, H, A2, f) per node.
        """
        for row in zip(self.grid.angles, self.rho, self.u, self.H, self.A2,
                       self.f):
            yield SnapshotRow(*(float(x) for x in row))

    def scalars(self):
        """
        Return the scalar diagnostics as a dict.
        """
        return {
            name: getattr(self, name)
            for name in (
                'V', 'A', 'res1', 'res2', 'eta_max', 'omega_max', 'deficit',
                'maxH', 'min_u', 'c0_min', 'c0_max', 'max_speed')
            }


def compute_geometry(space, graph, r_inner=None):
    """
    Compute the :class:`GeometrySnapshot` of *graph* in *space*.

    With σ the round metric and v = √(1 + |∇̃ρ|²/w²), the support function is
    u = w/v, the induced metric g = w²σ + dρ⊗dρ and the second fundamental
    form ``h = (−∇̃²ρ + ww′σ + (2w′/w)dρ⊗dρ)/v``. The area element is
    ``wⁿ·v`` times the grid weight and the flow speed is ``n·w′ − uH``.

    :param float r_inner: Inner radius for the enclosed volume (defaults to
        the lower end of the profile domain)
    :raises DomainError: if the graph leaves the profile domain
    :raises StarShapeError: if u <= 0 at some node
    """
    graph.validate(space)
    if r_inner is None:
        r_inner = space.r_lo
    grid = graph.grid
    n = space.n
    rho = graph.rho
    w, dw, _, _ = space.profile.jet(rho)
    gs = sphere.grad_sq(grid, rho)
    hess = sphere.hessian_terms(grid, rho)
    v = np.sqrt(1 + gs / (w * w))
    u = w / v
    bad = np.flatnonzero(~(u > 0))
    if bad.size:
        raise StarShapeError(
            'support function is not positive at node %d' % bad[0],
            node=int(bad[0]))
    # Normal curvature along the graph direction, common to n = 1 and n = 2
    k1 = (-hess.second + w * dw + 2 * dw * gs / w) / (v * (w * w + gs))
    if n == 1:
        H = k1
        A2 = k1 * k1
        sigma2 = None
        deficit = np.zeros_like(k1)
    else:
        k2 = (-hess.cot_first + w * dw) / (v * w * w)
        H = k1 + k2
        A2 = k1 * k1 + k2 * k2
        sigma2 = k1 * k2
        deficit = 0.5 * (k1 - k2) ** 2

    snap = GeometrySnapshot(space, graph, r_inner)
    snap.rho = rho
    snap.w = w
    snap.phi = dw
    snap.grad_sq = gs
    snap.v = v
    snap.u = u
    snap.H = H
    snap.A2 = A2
    snap.sigma2 = sigma2
    snap.dmu = w ** n * v
    snap.f = n * dw - u * H
    snap.eta = gs / (w * w)
    snap.omega = 0.5 * gs
    snap.deficit_nodal = deficit

    snap.V = enclosed_volume(space, graph, r_inner)
    snap.A = sphere.integrate(grid, snap.dmu) / grid.measure_ratio
    snap.res1, snap.res2 = minkowski_residuals(space, snap)
    snap.eta_max, snap.omega_max, snap.deficit = decay_quantities(space, snap)
    snap.maxH = float(H.max())
    snap.min_u = float(u.min())
    if np.all(dw > 0):
        c0 = (w / dw) ** 2
        snap.c0_min, snap.c0_max = float(c0.min()), float(c0.max())
    else:
        snap.c0_min = snap.c0_max = float('nan')
    snap.max_speed = float(np.abs(snap.f).max())
    return snap


def enclosed_volume(space, graph, r_inner=None):
    """
    Return the volume of the region between the leaf at *r_inner* and the
    graph: ``Σᵢ weightᵢ·∫_{r_inner}^{ρᵢ} wⁿ``, divided by the grid's
    :attr:`~warpflow.sphere.SphereGrid.measure_ratio` so that leaves are
    integrated exactly.

    :raises ValueError: if r_inner >= min ρ
    """
    if r_inner is None:
        r_inner = space.r_lo
    grid = graph.grid
    if not r_inner < graph.rho.min():
        raise ValueError('inner radius %g must lie below the graph' % r_inner)
    radial = radial_integral(space, graph.rho, r_inner)
    return sphere.integrate(grid, radial) / grid.measure_ratio


def surface_area(space, graph):
    """
    Return the area of the graph, ``Σ dμᵢ`` (measure-corrected as for
    :func:`enclosed_volume`).
    """
    return compute_geometry(space, graph).A


def minkowski_residuals(space, snapshot):
    """
    Return the normalized residuals of the two Minkowski identities as a
    ``(res1, res2)`` tuple.

    ``res1 = ∫(nφ − uH)dμ`` and, for n = 2 only,
    ``res2 = ∫[(n−1)φH − 2σ₂u − u(Ric(N,N) − Ric(ν,ν))]dμ``, where
    cos α = u/w is the angle between ν and the radial direction. Both are
    divided by A·max|H|; ``res2`` is None for n = 1.
    """
    s = snapshot
    norm = sphere.integrate(s.grid, s.dmu) * float(np.abs(s.H).max())
    if norm == 0:
        norm = 1.0
    res1 = sphere.integrate(s.grid, s.f * s.dmu) / norm
    if space.n == 1:
        return Residuals(res1, None)
    n = space.n
    curv_nn = ricci_along(space, s.rho, np.ones_like(s.rho))
    curv_nu = ricci_along(space, s.rho, s.u / s.w)
    integrand = (
        (n - 1) * s.phi * s.H - 2 * s.sigma2 * s.u
        - s.u * (curv_nn - curv_nu))
    return Residuals(res1, sphere.integrate(s.grid, integrand * s.dmu) / norm)


def decay_quantities(space, snapshot):
    """
    Return ``(eta_max, omega_max, deficit)``: the maxima of η = v² − 1 and
    ω = ½|∇̃ρ|², and the umbilicity deficit ``max(|A|² − H²/n)``.
    """
    s = snapshot
    logging.debug('Decay quantities on %r', s.graph)
    return Decay(
        float(s.eta.max()), float(s.omega.max()),
        float(s.deficit_nodal.max()))
