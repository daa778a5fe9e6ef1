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
This module provides the reference grids on the unit round sphere Sⁿ over
which radial graphs are sampled, together with their finite-difference
operators and quadrature.

For n = 1 the grid is the periodic circle with nodes θᵢ = 2πi/N. For n = 2
only axisymmetric functions (functions of the polar angle ϑ) are represented;
the nodes are staggered, ϑⱼ = (j + ½)π/N, so that no node sits on a pole, and
functions are extended evenly across the poles by reflective ghost values.
All stencils are second-order central differences.


Classes
=======

.. autoclass:: SphereGrid
   :members:


Functions
=========

.. autofunction:: derivative

.. autofunction:: grad_sq

.. autofunction:: hessian_terms

.. autofunction:: integrate

.. autofunction:: interpolate

.. autofunction:: resample
"""

import math
import logging
from collections import namedtuple

import numpy as np
from scipy import fft


#: The smallest permitted number of nodes
MIN_NODES = 8

HessianTerms = namedtuple('HessianTerms', ('second', 'cot_first', 'sincos_first'))


class SphereGrid(object):
    """
    A uniform grid on Sⁿ for n = 1 (periodic) or n = 2 (axisymmetric,
    staggered in the polar angle).

    .. attribute:: angles

        The node angles (θ for n = 1, ϑ for n = 2)

    .. attribute:: spacing

        The angular spacing h between nodes

    .. attribute:: weights

        The quadrature weight of each node: 2π/N for n = 1, and the midpoint
        weight 2π·sin ϑⱼ·π/N for n = 2

    :param int n: The sphere dimension (1 or 2)
    :param int size: The number of nodes N (at least 8)
    """

    def __init__(self, n, size):
        if n not in (1, 2):
            raise ValueError('n must be 1 or 2')
        size = int(size)
        if size < MIN_NODES:
            raise ValueError('grid requires at least %d nodes' % MIN_NODES)
        self.n = n
        self.size = size
        index = np.arange(size, dtype=float)
        if n == 1:
            self.spacing = 2 * math.pi / size
            self.angles = index * self.spacing
            self.weights = np.full(size, self.spacing)
            self._sin = self._cos = None
        else:
            self.spacing = math.pi / size
            self.angles = (index + 0.5) * self.spacing
            self._sin = np.sin(self.angles)
            self._cos = np.cos(self.angles)
            self.weights = 2 * math.pi * self._sin * self.spacing
        self.total_weight = math.fsum(self.weights)
        sphere_area = 2 * math.pi if n == 1 else 4 * math.pi
        #: Ratio of the discrete to the exact measure of Sⁿ
        self.measure_ratio = self.total_weight / sphere_area
        logging.debug('Constructed S^%d grid with %d nodes', n, size)

    def __len__(self):
        return self.size

    def __repr__(self):
        return '<SphereGrid n=%d N=%d>' % (self.n, self.size)

    def refined(self, factor=2):
        """
        Return a grid of the same dimension with *factor* times as many nodes.
        """
        return SphereGrid(self.n, self.size * factor)

    def _check(self, values):
        values = np.asarray(values, dtype=float)
        if values.shape != (self.size,):
            raise ValueError(
                'expected %d nodal values, got shape %r' % (
                    self.size, values.shape))
        return values

    def _neighbours(self, values):
        if self.n == 1:
            return np.roll(values, 1), np.roll(values, -1)
        # Even reflection across the poles: the ghost beyond node 0 is node 0
        padded = np.pad(values, 1, mode='symmetric')
        return padded[:-2], padded[2:]


def derivative(grid, values):
    """
    Return the central-difference first derivative of the nodal *values*
    with respect to the node angle.
    """
    values = grid._check(values)
    before, after = grid._neighbours(values)
    return (after - before) / (2 * grid.spacing)


def grad_sq(grid, values):
    """
    Return the nodal squared gradient |∇̃ρ|² of *values* with respect to the
    round metric. For both supported cases this is the square of the angular
    derivative.
    """
    return derivative(grid, values) ** 2


def hessian_terms(grid, values):
    """
    Return the second-derivative data of the nodal *values* as a
    :class:`HessianTerms` tuple.

    For n = 1 only ``second`` (ρ_θθ) is populated. For n = 2 the tuple holds
    ``second`` (ρ_ϑϑ = ∇̃²_ϑϑρ), ``cot_first`` (cot ϑ·ρ_ϑ) and
    ``sincos_first`` (sin ϑ cos ϑ·ρ_ϑ = ∇̃²_ϕϕρ); the Laplacian is
    ``second + cot_first``.
    """
    values = grid._check(values)
    before, after = grid._neighbours(values)
    second = (after - 2 * values + before) / grid.spacing ** 2
    if grid.n == 1:
        return HessianTerms(second, None, None)
    first = (after - before) / (2 * grid.spacing)
    return HessianTerms(
        second, grid._cos / grid._sin * first, grid._sin * grid._cos * first)


def integrate(grid, values):
    """
    Return the quadrature of the nodal *values* over Sⁿ. The weighted terms
    are summed with :func:`math.fsum`, so the result does not depend on
    summation order.
    """
    values = grid._check(values)
    return math.fsum(grid.weights * values)


def interpolate(grid, values, angles):
    """
    Evaluate the spectral interpolant of the nodal *values* at arbitrary
    *angles*: the trigonometric interpolant for n = 1 and the even cosine
    series (the DCT-II expansion on the staggered grid) for n = 2.
    """
    values = grid._check(values)
    angles = np.asarray(angles, dtype=float)
    size = grid.size
    if grid.n == 1:
        coeffs = np.fft.rfft(values) / size
        k = np.arange(coeffs.size)
        scale = np.full(coeffs.size, 2.0)
        scale[0] = 1.0
        if size % 2 == 0:
            # The Nyquist mode is real on the grid; keep only its cosine part
            scale[-1] = 1.0
            coeffs[-1] = coeffs[-1].real
        phase = np.exp(1j * np.outer(angles, k))
        return (phase * (scale * coeffs)).real.sum(axis=1)
    coeffs = fft.dct(values, type=2) / size
    coeffs[0] /= 2
    k = np.arange(size)
    return np.cos(np.outer(angles, k)).dot(coeffs)


def resample(grid, values, target):
    """
    Resample the nodal *values* on *grid* onto the grid *target* of the same
    dimension by spectral interpolation.
    """
    if target.n != grid.n:
        raise ValueError('cannot resample between different dimensions')
    return interpolate(grid, values, target.angles)
