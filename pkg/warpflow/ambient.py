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
This module evaluates the warped-product ambient space ``dr² + w(r)²σ`` over
the unit round sphere, together with the closed conformal vector field
``ξ = w(r)∂_r`` it carries. Throughout the package the warping function is
called *w* and the conformal factor ``φ = w′`` is called *phi*; the two are
never conflated.

The :class:`WarpingProfile` sub-classes provide the jet ``(w, w′, w″, w‴)`` of
each supported family, and the :class:`AmbientSpace` class pairs a profile
with the hypersurface dimension *n*. All other operations are plain functions
of these two objects.


Classes
=======

.. autoclass:: WarpingProfile
   :members:

.. autoclass:: EuclideanProfile

.. autoclass:: SphereProfile

.. autoclass:: HyperbolicProfile

.. autoclass:: PolynomialProfile

.. autoclass:: TableProfile
   :members: from_csv

.. autoclass:: AmbientSpace
   :members:

.. autoclass:: ConditionReport
   :members:


Functions
=========

.. autofunction:: make_profile

.. autofunction:: eval_warping

.. autofunction:: conformal_data

.. autofunction:: leaf_quantities

.. autofunction:: radial_integral

.. autofunction:: ambient_curvatures

.. autofunction:: ricci_along

.. autofunction:: check_conditions


Exceptions
==========

.. autoexception:: AmbientError

.. autoexception:: DomainError

.. autoexception:: SingularPointError

.. autoexception:: ProfileError


Examples
========

Evaluating the round three-sphere as a warped product over S²::

    from warpflow import ambient

    space = ambient.AmbientSpace(ambient.SphereProfile(), n=2)
    print(ambient.eval_warping(space.profile, 1.0))
    print(ambient.leaf_quantities(space, 0.5).H)
    print(ambient.check_conditions(space, 100).passed)
"""

import math
import logging
from collections import namedtuple

import numpy as np
from numpy.polynomial import Polynomial
from scipy.interpolate import CubicSpline, PPoly
from scipy.integrate import quad

from .exc import WarpflowError


#: Volume of the unit round sphere Sⁿ keyed by n
SPHERE_AREA = {1: 2 * math.pi, 2: 4 * math.pi}

# Quadrature tolerances for the adaptive leaf-volume integral
QUAD_RTOL = 1e-10
QUAD_ATOL = 1e-14


class AmbientError(WarpflowError):
    """
    Base class for errors raised while evaluating the ambient space.
    """


class DomainError(AmbientError):
    """
    Raised when a radius lies outside the domain of the warping profile.

    :param str message: The error message
    :param float radius: The offending radius (if known)
    """
    def __init__(self, message, radius=None):
        self.radius = radius
        super(DomainError, self).__init__(message)


class SingularPointError(AmbientError):
    """
    Raised when a quantity requiring division by w is evaluated where w = 0.
    """


class ProfileError(AmbientError):
    """
    Raised when a warping profile definition is invalid.
    """


Jet = namedtuple('Jet', ('w', 'dw', 'd2w', 'd3w'))
ConformalData = namedtuple('ConformalData', (
    'phi', 'xi_phi', 'xi_xi_phi', 'xi_sq', 'phi_sq_minus_xi_phi'))
LeafQuantities = namedtuple('LeafQuantities', ('H', 'area', 'volume'))
Curvatures = namedtuple('Curvatures', ('K_rad', 'K_tan', 'Ric_NN', 'Ric_EE'))
ConditionVerdict = namedtuple('ConditionVerdict', (
    'name', 'label', 'passed', 'strict', 'margin', 'argmin'))


def _unwrap(r, values):
    # Scalars in, scalars out
    if np.ndim(r) == 0:
        return tuple(float(v) for v in values)
    return tuple(np.asarray(v, dtype=float) for v in values)


class WarpingProfile(object):
    """
    Abstract base class for warping functions w(r) on a closed radius
    interval.

    Sub-classes implement :meth:`_jet` (the unscaled jet of the family) and
    :meth:`_antiderivative` (an exact antiderivative of the n-th power of the
    unscaled function). The base class applies the *scale* factor, the
    optional *corrupt* switch (``'d2'`` flips the sign of w″; it exists only
    as a negative control for the verification suite) and validates that w is
    positive on the open domain.

    :param tuple r_domain: The closed interval ``(r_lo, r_hi)`` of radii
    :param float scale: A positive multiplier applied to w and its derivatives
    :param str corrupt: None, or ``'d2'`` to flip the sign of w″
    """

    family = None
    default_domain = None

    def __init__(self, r_domain=None, scale=1.0, corrupt=None):
        if r_domain is None:
            r_domain = self.default_domain
        if r_domain is None:
            raise ProfileError('%s profile requires r_domain' % self.family)
        r_lo, r_hi = (float(r) for r in r_domain)
        if not (math.isfinite(r_lo) and math.isfinite(r_hi)):
            raise ProfileError('r_domain must be finite')
        if not r_lo < r_hi:
            raise ProfileError('r_domain must satisfy r_lo < r_hi')
        if not scale > 0:
            raise ProfileError('scale must be positive')
        if corrupt not in (None, 'd2'):
            raise ProfileError('Unknown corruption %r' % corrupt)
        self.r_lo = r_lo
        self.r_hi = r_hi
        self.scale = float(scale)
        self.corrupt = corrupt

    @property
    def r_domain(self):
        """
        The closed radius interval ``(r_lo, r_hi)`` of the profile.
        """
        return (self.r_lo, self.r_hi)

    def _validate(self, samples=513):
        radii = np.linspace(self.r_lo, self.r_hi, samples)[1:-1]
        w = self.jet(radii).w
        bad = np.flatnonzero(~(w > 0))
        if bad.size:
            raise ProfileError(
                '%s profile is not positive at r=%.6g (w=%.6g)' % (
                    self.family, radii[bad[0]], w[bad[0]]))
        w_lo = self.jet(self.r_lo).w
        if w_lo < 0:
            raise ProfileError(
                '%s profile is negative at r_lo=%.6g' % (
                    self.family, self.r_lo))
        logging.debug('Validated %s profile on [%g, %g]',
                      self.family, self.r_lo, self.r_hi)

    def _jet(self, r):
        raise NotImplementedError

    def _antiderivative(self, n):
        raise NotImplementedError

    def jet(self, r):
        """
        Return the :class:`Jet` ``(w, w′, w″, w‴)`` at radius (or array of
        radii) *r*. No domain checking is performed; see
        :func:`eval_warping`.
        """
        r = np.asarray(r, dtype=float)
        f, df, d2f, d3f = self._jet(r)
        s = self.scale
        d2f = -d2f if self.corrupt == 'd2' else d2f
        return Jet(*_unwrap(r, (s * f, s * df, s * d2f, s * d3f)))

    def antiderivative(self, n):
        """
        Return a callable F with F′(r) = w(r)**n, exact for every family.
        """
        inner = self._antiderivative(n)
        factor = self.scale ** n
        return lambda r: factor * inner(np.asarray(r, dtype=float))

    def params(self):
        """
        Return a dict describing the profile, suitable for JSON output.
        """
        result = {
            'family': self.family,
            'r_domain': [self.r_lo, self.r_hi],
            'scale': self.scale,
            }
        if self.corrupt:
            result['corrupt'] = self.corrupt
        return result

    def __repr__(self):
        return '<%s r_domain=%r scale=%g>' % (
            self.__class__.__name__, self.r_domain, self.scale)


class EuclideanProfile(WarpingProfile):
    """
    The flat profile w(r) = r.
    """
    family = 'euclidean'
    default_domain = (0.0, 50.0)

    def __init__(self, r_domain=None, scale=1.0, corrupt=None):
        super(EuclideanProfile, self).__init__(r_domain, scale, corrupt)
        self._validate()

    def _jet(self, r):
        return r, np.ones_like(r), np.zeros_like(r), np.zeros_like(r)

    def _antiderivative(self, n):
        return lambda r: r ** (n + 1) / (n + 1)


class SphereProfile(WarpingProfile):
    """
    The round profile w(r) = sin r; the ambient is the unit sphere Sⁿ⁺¹.
    """
    family = 'sphere'
    default_domain = (0.0, math.pi)

    def __init__(self, r_domain=None, scale=1.0, corrupt=None):
        super(SphereProfile, self).__init__(r_domain, scale, corrupt)
        self._validate()

    def _jet(self, r):
        s, c = np.sin(r), np.cos(r)
        return s, c, -s, -c

    def _antiderivative(self, n):
        if n == 1:
            return lambda r: -np.cos(r)
        elif n == 2:
            return lambda r: (r - np.sin(r) * np.cos(r)) / 2
        raise ValueError('n must be 1 or 2')


class HyperbolicProfile(WarpingProfile):
    """
    The hyperbolic profile w(r) = sinh r; the ambient is hyperbolic space.
    """
    family = 'hyperbolic'
    default_domain = (0.0, 5.0)

    def __init__(self, r_domain=None, scale=1.0, corrupt=None):
        super(HyperbolicProfile, self).__init__(r_domain, scale, corrupt)
        self._validate()

    def _jet(self, r):
        s, c = np.sinh(r), np.cosh(r)
        return s, c, s, c

    def _antiderivative(self, n):
        if n == 1:
            return lambda r: np.cosh(r)
        elif n == 2:
            return lambda r: (np.sinh(r) * np.cosh(r) - r) / 2
        raise ValueError('n must be 1 or 2')


class PolynomialProfile(WarpingProfile):
    """
    A polynomial profile w(r) = c₀ + c₁r + c₂r² + ...

    :param coefficients: The coefficients in ascending order of power
    """
    family = 'polynomial'

    def __init__(self, coefficients, r_domain=None, scale=1.0, corrupt=None):
        super(PolynomialProfile, self).__init__(r_domain, scale, corrupt)
        coefficients = [float(c) for c in coefficients]
        if not coefficients:
            raise ProfileError('polynomial profile requires coefficients')
        self.coefficients = coefficients
        self._poly = Polynomial(coefficients)
        self._derivs = [self._poly.deriv(k) for k in (1, 2, 3)]
        self._validate()

    def _jet(self, r):
        return (self._poly(r),) + tuple(d(r) for d in self._derivs)

    def _antiderivative(self, n):
        return (self._poly ** n).integ()

    def params(self):
        result = super(PolynomialProfile, self).params()
        result['coefficients'] = self.coefficients
        return result


class TableProfile(WarpingProfile):
    """
    A tabulated profile reconstructed by a C² cubic spline through the samples
    ``(radii[i], values[i])``. The third derivative is the spline's
    piecewise-constant third derivative.

    The radii must be strictly increasing and the values positive, except that
    the first value may be zero (a singular point at r_lo).

    :param radii: The sample radii
    :param values: The values of w at the sample radii
    """
    family = 'table'

    def __init__(self, radii, values, scale=1.0, corrupt=None):
        radii = np.asarray(radii, dtype=float)
        values = np.asarray(values, dtype=float)
        if radii.ndim != 1 or radii.shape != values.shape:
            raise ProfileError('table radii and values must be matching rows')
        if radii.size < 4:
            raise ProfileError('table profile requires at least 4 samples')
        if not np.all(np.diff(radii) > 0):
            raise ProfileError('table radii must be strictly increasing')
        negative = np.flatnonzero(values < 0)
        if negative.size:
            raise ProfileError('table value %g at r=%g is negative' % (
                values[negative[0]], radii[negative[0]]))
        if np.any(values[1:] == 0):
            raise ProfileError(
                'table values may only vanish at the first radius')
        super(TableProfile, self).__init__(
            (radii[0], radii[-1]), scale, corrupt)
        self.radii = radii
        self.values = values
        self._spline = CubicSpline(radii, values)
        self._validate()

    @classmethod
    def from_csv(cls, fileobj, **kwargs):
        """
        Construct a profile from a two-column CSV stream of ``r, w`` rows
        (see :class:`~warpflow.csv.CSVSource`).
        """
        from .csv import CSVSource
        with CSVSource(fileobj, columns=2) as source:
            rows = list(source)
        if not rows:
            raise ProfileError('table profile file contains no rows')
        radii, values = zip(*rows)
        return cls(radii, values, **kwargs)

    def _jet(self, r):
        return tuple(self._spline(r, k) for k in range(4))

    def _antiderivative(self, n):
        if n == 1:
            return self._spline.antiderivative()
        elif n == 2:
            # Square each cubic piece (coefficients are in descending powers
            # of x - x_j so a plain convolution applies)
            c = self._spline.c
            squared = np.array([
                np.convolve(c[:, j], c[:, j]) for j in range(c.shape[1])]).T
            return PPoly(squared, self._spline.x).antiderivative()
        raise ValueError('n must be 1 or 2')

    def params(self):
        result = super(TableProfile, self).params()
        result['samples'] = int(self.radii.size)
        return result


FAMILIES = {
    'euclidean': EuclideanProfile,
    'sphere': SphereProfile,
    'hyperbolic': HyperbolicProfile,
    'polynomial': PolynomialProfile,
    'table': TableProfile,
    }


def make_profile(family, r_domain=None, scale=1.0, coefficients=None,
                 table=None, corrupt=None):
    """
    Construct a :class:`WarpingProfile` from a family name and parameters.

    :param str family: One of ``euclidean``, ``sphere``, ``hyperbolic``,
        ``polynomial`` or ``table``
    :param tuple r_domain: The radius interval (ignored for tables, whose
        domain is the range of the sampled radii)
    :param float scale: Multiplier applied to w
    :param coefficients: Ascending coefficients (polynomial family only)
    :param table: A ``(radii, values)`` pair (table family only)
    :param str corrupt: Optional negative-control switch (``'d2'``)
    :returns: A :class:`WarpingProfile` instance
    """
    # pylint: disable=too-many-arguments
    try:
        cls = FAMILIES[family]
    except KeyError:
        raise ProfileError('Unknown profile family %s' % family)
    if cls is PolynomialProfile:
        if coefficients is None:
            raise ProfileError('polynomial profile requires coefficients')
        return cls(coefficients, r_domain, scale=scale, corrupt=corrupt)
    elif cls is TableProfile:
        if table is None:
            raise ProfileError('table profile requires samples')
        radii, values = table
        return cls(radii, values, scale=scale, corrupt=corrupt)
    return cls(r_domain, scale=scale, corrupt=corrupt)


class AmbientSpace(object):
    """
    The warped product ``dr² + w(r)²σ`` over the unit round sphere Sⁿ, with
    hypersurface dimension *n* (1 or 2).

    :param WarpingProfile profile: The warping function
    :param int n: The hypersurface dimension
    """

    def __init__(self, profile, n):
        if n not in SPHERE_AREA:
            raise ValueError('n must be 1 or 2')
        self.profile = profile
        self.n = n

    @property
    def sphere_area(self):
        """
        The volume |Sⁿ| of the unit round sphere.
        """
        return SPHERE_AREA[self.n]

    @property
    def r_lo(self):
        """
        The lower end of the radius domain.
        """
        return self.profile.r_lo

    @property
    def r_hi(self):
        """
        The upper end of the radius domain.
        """
        return self.profile.r_hi

    def params(self):
        """
        Return a dict describing the space, suitable for JSON output.
        """
        result = self.profile.params()
        result['n'] = self.n
        return result

    def __repr__(self):
        return '<AmbientSpace n=%d profile=%r>' % (self.n, self.profile)


def _check_domain(profile, r):
    r = np.asarray(r, dtype=float)
    outside = (r < profile.r_lo) | (r > profile.r_hi) | ~np.isfinite(r)
    if np.any(outside):
        bad = float(r[outside].flat[0]) if r.ndim else float(r)
        raise DomainError(
            'radius %.17g outside profile domain [%g, %g]' % (
                bad, profile.r_lo, profile.r_hi), radius=bad)


def eval_warping(profile, r):
    """
    Evaluate the jet ``(w, w′, w″, w‴)`` of *profile* at *r* (a float or an
    array of radii).

    :raises DomainError: if any radius lies outside the profile domain
    :returns: A :class:`Jet` of floats or arrays
    """
    _check_domain(profile, r)
    return profile.jet(r)


def conformal_data(space, r):
    """
    Evaluate the conformal data of the closed field ξ = w∂_r at *r*.

    The fields of the result are ``phi`` (φ = w′), ``xi_phi`` (ξ(φ) = ww″),
    ``xi_xi_phi`` (ξ(ξ(φ)) = w(w′w″ + ww‴)), ``xi_sq`` (|ξ|² = w²) and
    ``phi_sq_minus_xi_phi`` (φ² − ξ(φ)).

    :returns: A :class:`ConformalData` tuple
    """
    w, dw, d2w, d3w = eval_warping(space.profile, r)
    xi_phi = w * d2w
    return ConformalData(
        dw, xi_phi, w * (dw * d2w + w * d3w), w * w, dw * dw - xi_phi)


def radial_integral(space, r, r_inner=None, method='exact'):
    """
    Return ``∫_{r_inner}^{r} w(s)ⁿ ds`` for a float or array *r*.

    With *method* ``'exact'`` (the default) the profile's exact
    antiderivative is used; with ``'quad'`` the integral is evaluated by
    adaptive quadrature (:func:`scipy.integrate.quad`) to a relative tolerance
    of 1e-10.
    """
    profile = space.profile
    if r_inner is None:
        r_inner = profile.r_lo
    _check_domain(profile, r)
    _check_domain(profile, r_inner)
    n = space.n
    if method == 'exact':
        antiderivative = profile.antiderivative(n)
        result = antiderivative(r) - antiderivative(r_inner)
    elif method == 'quad':
        integrand = lambda s: profile.jet(s).w ** n
        result = np.vectorize(
            lambda b: quad(integrand, r_inner, b,
                           epsrel=QUAD_RTOL, epsabs=QUAD_ATOL)[0],
            otypes=[float])(r)
    else:
        raise ValueError('Unknown integration method %s' % method)
    return float(result) if np.ndim(r) == 0 else np.asarray(result)


def leaf_quantities(space, r, r_inner=None, method='exact'):
    """
    Return the mean curvature, area and enclosed volume of the leaf S(r).

    The leaf is totally umbilical with H = n·w′/w, its area is |Sⁿ|·wⁿ and
    the volume between the leaves at *r_inner* (defaulting to r_lo) and *r*
    is |Sⁿ|·∫wⁿ.

    :raises ValueError: if r <= r_inner
    :returns: A :class:`LeafQuantities` tuple
    """
    if r_inner is None:
        r_inner = space.r_lo
    if np.any(np.asarray(r) <= r_inner):
        raise ValueError('leaf radius must exceed the inner radius %g' %
                         r_inner)
    w, dw, _, _ = eval_warping(space.profile, r)
    n = space.n
    return LeafQuantities(
        n * dw / w,
        space.sphere_area * w ** n,
        space.sphere_area * radial_integral(space, r, r_inner, method))


def ambient_curvatures(space, r):
    """
    Return the sectional curvatures of radial planes (``K_rad = −w″/w``) and
    of planes tangent to the leaves (``K_tan = (1 − w′²)/w²``) together with
    the Ricci curvatures in the radial direction N and in a leaf direction E.

    :raises SingularPointError: if w vanishes at *r*
    :returns: A :class:`Curvatures` tuple
    """
    w, dw, d2w, _ = eval_warping(space.profile, r)
    if np.any(np.asarray(w) == 0):
        raise SingularPointError(
            'curvature is undefined where w = 0 (r=%r)' % (r,))
    n = space.n
    k_rad = -d2w / w
    k_tan = (1 - dw * dw) / (w * w)
    return Curvatures(
        k_rad, k_tan, n * k_rad, k_rad + (n - 1) * k_tan)


def ricci_along(space, r, cos_alpha):
    """
    Return Ric(ν, ν) for a unit vector ν making angle α with the radial
    direction: ``cos²α·Ric(N,N) + (1 − cos²α)·Ric(E,E)``. The warped-product
    Ricci tensor is diagonal in the (N, leaf) frame, so no cross terms
    appear.
    """
    cos_alpha = np.asarray(cos_alpha, dtype=float)
    if np.any(np.abs(cos_alpha) > 1 + 1e-12):
        raise ValueError('cos_alpha must lie in [-1, 1]')
    curv = ambient_curvatures(space, r)
    c2 = np.minimum(cos_alpha * cos_alpha, 1.0)
    result = c2 * curv.Ric_NN + (1 - c2) * curv.Ric_EE
    return float(result) if np.ndim(result) == 0 else result


class ConditionReport(object):
    """
    The verdicts of the admissibility conditions over a sample of radii.

    Each verdict is a :class:`ConditionVerdict` with the fields ``name``,
    ``label``, ``passed``, ``strict`` (margin positive everywhere), ``margin``
    (the worst margin) and ``argmin`` (the radius where it occurs).
    """

    def __init__(self, verdicts, radii):
        self.verdicts = list(verdicts)
        self.radii = radii

    def __iter__(self):
        return iter(self.verdicts)

    def __getitem__(self, name):
        for verdict in self.verdicts:
            if verdict.name == name:
                return verdict
        raise KeyError(name)

    @property
    def passed(self):
        """
        True if every condition passed.
        """
        return all(v.passed for v in self.verdicts)

    @property
    def failed(self):
        """
        The names of the conditions that failed.
        """
        return [v.name for v in self.verdicts if not v.passed]

    def as_dict(self):
        """
        Return the report as a JSON-ready dict.
        """
        return {
            'samples': int(self.radii.size),
            'r_range': [float(self.radii[0]), float(self.radii[-1])],
            'passed': self.passed,
            'conditions': [v._asdict() for v in self.verdicts],
            }

    def format(self):
        """
        Return the report as a human-readable table.
        """
        lines = ['%-34s %-6s %-6s %14s %12s' % (
            'condition', 'result', 'strict', 'margin', 'at r')]
        for v in self.verdicts:
            lines.append('%-34s %-6s %-6s %14.6g %12.6g' % (
                v.label, 'pass' if v.passed else 'FAIL',
                'yes' if v.strict else 'no', v.margin, v.argmin))
        return '\n'.join(lines)


def check_conditions(space, samples=200, r_range=None):
    """
    Evaluate the admissibility conditions on *samples* uniformly spaced radii
    in the open interval *r_range* (defaulting to the profile domain).

    The conditions reported are (i) φ > 0, (ii) φ² − ξ(φ) > 0, (iv) least
    Ricci curvature in the ξ direction, which over the unit round sphere
    reduces to ``1 − (w′² − ww″) ≥ 0``, and the sectional condition
    ``w′² − ww″ ≥ 0``. Conditions (iv) and the sectional condition are
    non-strict; their ``strict`` flag records whether the margin is positive
    everywhere.

    :returns: A :class:`ConditionReport`
    """
    if samples < 2:
        raise ValueError('at least 2 samples are required')
    lo, hi = r_range if r_range is not None else space.profile.r_domain
    radii = np.linspace(lo, hi, samples + 2)[1:-1]
    w, dw, d2w, _ = eval_warping(space.profile, radii)
    sq = dw * dw
    cross = w * d2w
    q = sq - cross
    # Cancellation in w′² − ww″ grows with the size of its terms
    tol = 1e-12 * np.maximum(1.0, np.maximum(sq, np.abs(cross)))

    def verdict(name, label, margin, strict_only):
        i = int(np.argmin(margin))
        strict = bool(np.all(margin > tol))
        passed = strict if strict_only else bool(np.all(margin >= -tol))
        logging.debug('Condition %s: margin %g at r=%g', name, margin[i],
                      radii[i])
        return ConditionVerdict(
            name, label, passed, strict, float(margin[i]), float(radii[i]))

    return ConditionReport([
        verdict('phi_positive', '(i) phi > 0', dw, True),
        verdict('phi_sq_minus_xi_phi', '(ii) phi^2 - xi(phi) > 0', q, True),
        verdict('ricci_minimal', '(iv) least Ricci along xi', 1 - q, False),
        verdict('sectional', 'sectional K(X,xi) >= -phi^2/|xi|^2', q, False),
        ], radii)
