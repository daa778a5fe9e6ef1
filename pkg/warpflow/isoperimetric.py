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
This module provides the isoperimetric profile of a warped-product ambient
space: the area and enclosed volume of the coordinate spheres S(r), the radius
r* of the coordinate sphere enclosing a given volume, and the isoperimetric
gap ``Area(Σ) − Area(S(r*))`` of a radial graph.

Coordinate spheres are parameterized by the coordinate radius r. The level
value ``|ξ|/φ = w/w′`` labelling the same sphere is available through
:func:`level_value`; it is monotone in r exactly when φ² − ξ(φ) > 0, and is
undefined (reported as None) where w′ ≤ 0.


Classes
=======

.. autoclass:: IsoProfile
   :members:


Functions
=========

.. autofunction:: level_value

.. autofunction:: solve_rstar

.. autofunction:: iso_report


Exceptions
==========

.. autoexception:: RangeError
"""

import logging
from collections import namedtuple

import numpy as np
from scipy.optimize import brentq, newton

from .ambient import eval_warping, radial_integral
from .hypersurface import compute_geometry
from .exc import WarpflowError


ProfileRow = namedtuple('ProfileRow', ('r', 'level', 'area', 'volume'))
IsoReport = namedtuple('IsoReport', (
    'V', 'A', 'r_star', 'area_star', 'gap', 'equality', 'near_leaf'))


class RangeError(WarpflowError):
    """
    Raised when a target volume cannot be enclosed by any coordinate sphere
    of the profile domain.
    """


def level_value(space, r):
    """
    Return the level value w/w′ of the coordinate sphere at radius *r*, or
    None where w′ ≤ 0.
    """
    w, dw, _, _ = eval_warping(space.profile, r)
    if dw <= 0:
        return None
    return w / dw


def _leaf_volume(space, r, r_inner):
    return space.sphere_area * radial_integral(space, r, r_inner)


def solve_rstar(space, r_inner, target_volume):
    """
    Return the radius r* whose coordinate sphere encloses *target_volume*
    above the leaf at *r_inner*: ``Vol(B(r*)) = target_volume``.

    The root is bracketed on ``[r_inner, r_hi]`` and found by
    :func:`scipy.optimize.brentq`, then polished by Newton iterations using
    dVol/dr = |Sⁿ|·wⁿ.

    :raises RangeError: if the target is not positive or exceeds the volume
        of the largest coordinate sphere
    """
    if r_inner is None:
        r_inner = space.r_lo
    if not target_volume > 0:
        raise RangeError('target volume must be positive')
    r_hi = space.r_hi
    v_max = _leaf_volume(space, r_hi, r_inner)
    if target_volume > v_max:
        raise RangeError(
            'target volume %g exceeds the largest enclosed volume %g' % (
                target_volume, v_max))
    func = lambda r: _leaf_volume(space, r, r_inner) - target_volume
    r_star = brentq(func, r_inner, r_hi, xtol=1e-15, maxiter=500)
    fprime = lambda r: space.sphere_area * space.profile.jet(r).w ** space.n
    if fprime(r_star) > 0:
        try:
            polished = newton(func, r_star, fprime=fprime, tol=1e-15,
                              maxiter=5)
        except (RuntimeError, ArithmeticError):
            polished = r_star
        if (r_inner < polished <= r_hi and
                abs(func(polished)) <= abs(func(r_star))):
            r_star = polished
    logging.debug('Solved r*=%.17g for volume %.17g', r_star, target_volume)
    return float(r_star)


def iso_report(space, graph, r_inner=None, tolerance=1e-4):
    """
    Compare the area of *graph* with the area of the coordinate sphere that
    encloses the same volume.

    The result is an :data:`IsoReport` ``(V, A, r_star, area_star, gap,
    equality, near_leaf)`` where ``gap = A − area_star``; ``equality`` is set
    when ``|gap| <= tolerance·A`` and ``near_leaf`` when max η <= tolerance.
    """
    if r_inner is None:
        r_inner = space.r_lo
    snap = compute_geometry(space, graph, r_inner)
    r_star = solve_rstar(space, r_inner, snap.V)
    area_star = space.sphere_area * space.profile.jet(r_star).w ** space.n
    gap = snap.A - area_star
    return IsoReport(
        snap.V, snap.A, r_star, area_star, gap,
        abs(gap) <= tolerance * snap.A, snap.eta_max <= tolerance)


class IsoProfile(object):
    """
    The isoperimetric profile of *space* sampled at *radii*: the area
    ``|Sⁿ|·wⁿ`` and enclosed volume (above *r_inner*) of each coordinate
    sphere, plus its level value.

    :param AmbientSpace space: The ambient space
    :param radii: The coordinate radii to tabulate (each above *r_inner*)
    :param float r_inner: The inner radius (defaults to r_lo)
    """

    def __init__(self, space, radii, r_inner=None):
        if r_inner is None:
            r_inner = space.r_lo
        radii = np.atleast_1d(np.asarray(radii, dtype=float))
        if np.any(radii <= r_inner):
            raise ValueError('profile radii must exceed the inner radius')
        self.space = space
        self.r_inner = r_inner
        self.radii = radii
        w = eval_warping(space.profile, radii).w
        self.areas = space.sphere_area * w ** space.n
        self.volumes = _leaf_volume(space, radii, r_inner)

    def __iter__(self):
        for r, area, volume in zip(self.radii, self.areas, self.volumes):
            yield ProfileRow(
                float(r), level_value(self.space, float(r)),
                float(area), float(volume))

    def volume_at(self, r):
        """
        Return the enclosed volume of the coordinate sphere at *r*.
        """
        return float(_leaf_volume(self.space, r, self.r_inner))
