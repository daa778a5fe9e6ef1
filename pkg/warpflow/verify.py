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
This module provides the numerical oracles that certify the identities the
flow relies on, independently of the flow integrator itself.

Each check returns an :class:`IdentityReport` holding one
:data:`IdentityEntry` per identity: its name, the largest residual observed,
the number of samples it was evaluated on, the tolerance and the verdict.
Reports can be merged with :meth:`IdentityReport.extend` and rendered either
as a JSON-ready dict or as a table.

The profile identities (:func:`check_jet`, :func:`check_conformal_identities`,
:func:`check_closed_curvatures` and :func:`check_leaf_volume`) compare closed
forms against central finite differences or adaptive quadrature. The
discretization identities (:func:`check_minkowski` and
:func:`check_evolution_residual`) measure residuals under grid refinement.
:func:`check_run` turns the record of a run into property verdicts (volume
conservation, area monotonicity, a priori bounds and decay).


Classes
=======

.. autoclass:: IdentityReport
   :members:


Functions
=========

.. autofunction:: check_jet

.. autofunction:: check_conformal_identities

.. autofunction:: check_closed_curvatures

.. autofunction:: check_leaf_volume

.. autofunction:: check_minkowski

.. autofunction:: check_evolution_residual

.. autofunction:: evolution_frames

.. autofunction:: check_run

.. autofunction:: run_battery

.. autofunction:: laplace_beltrami


Examples
========

Running the profile battery for hyperbolic space::

    from warpflow import ambient, verify

    space = ambient.AmbientSpace(ambient.HyperbolicProfile(), n=1)
    report = verify.run_battery(space, samples=100)
    print(report.format())
"""

import math
import logging
from collections import namedtuple

import numpy as np

from . import sphere, flow
from .ambient import (
    EuclideanProfile,
    SphereProfile,
    HyperbolicProfile,
    TableProfile,
    ambient_curvatures,
    radial_integral,
    )
from .hypersurface import (
    RadialGraph,
    compute_geometry,
    minkowski_residuals,
    )


#: Step of the central finite differences
FD_STEP = 1e-5

#: Samples with |w′| below this are skipped by identities dividing by w′
PHI_FLOOR = 1e-8

#: Minimum fitted order of the Minkowski residuals under refinement
MIN_ORDER = 1.9

#: Allowed excess of the evolution residual over its calibrated bound; with
#: (N, dt) → (2N, dt/4) this demands a reduction by a factor of at least 3
EVOLUTION_SLACK = 4.0 / 3.0

#: Residuals at or below this level count as exact
EXACT = 1e-14


IdentityEntry = namedtuple('IdentityEntry', (
    'name', 'residual', 'samples', 'tolerance', 'passed', 'note'))


class IdentityReport(object):
    """
    An ordered collection of :data:`IdentityEntry` verdicts.

    Residuals are non-negative and an entry passes iff its residual does not
    exceed its tolerance (entries that could not be evaluated pass with an
    explanatory note).
    """

    def __init__(self, entries=()):
        self.entries = list(entries)

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, name):
        for entry in self.entries:
            if entry.name == name:
                return entry
        raise KeyError(name)

    def add(self, name, residual, samples, tolerance, note='', passed=None):
        """
        Append an entry; the verdict is ``residual <= tolerance`` unless
        *passed* is given explicitly.
        """
        # pylint: disable=too-many-arguments
        residual = abs(float(residual))
        if passed is None:
            passed = residual <= tolerance
        entry = IdentityEntry(
            name, residual, int(samples), float(tolerance), bool(passed),
            note)
        logging.debug('Identity %s: residual %.3g (tol %.3g) %s', name,
                      residual, tolerance, 'pass' if passed else 'FAIL')
        self.entries.append(entry)
        return entry

    def extend(self, other):
        """
        Append every entry of the report *other*.
        """
        self.entries.extend(other.entries)
        return self

    @property
    def passed(self):
        """
        True if every entry passed.
        """
        return all(e.passed for e in self.entries)

    @property
    def failed(self):
        """
        The names of the entries that failed.
        """
        return [e.name for e in self.entries if not e.passed]

    def as_dict(self):
        """
        Return the report as a JSON-ready dict.
        """
        return {
            'passed': self.passed,
            'identities': [e._asdict() for e in self.entries],
            }

    def format(self):
        """
        Return the report as a human-readable table.
        """
        lines = ['%-28s %-6s %12s %12s %8s  %s' % (
            'identity', 'result', 'residual', 'tolerance', 'samples',
            'note')]
        for e in self.entries:
            lines.append('%-28s %-6s %12.4g %12.4g %8d  %s' % (
                e.name, 'pass' if e.passed else 'FAIL', e.residual,
                e.tolerance, e.samples, e.note))
        return '\n'.join(lines)


def default_tolerance(profile):
    """
    Return the tolerance of the finite-difference identities for *profile*:
    1e-9 for the space forms, 1e-4 for tables (spline-limited) and 1e-6
    otherwise.
    """
    if isinstance(profile, (EuclideanProfile, SphereProfile,
                            HyperbolicProfile)):
        return 1e-9
    elif isinstance(profile, TableProfile):
        return 1e-4
    return 1e-6


def sample_radii(space, samples, r_range=None):
    """
    Return *samples* uniformly spaced radii strictly inside *r_range*
    (defaulting to the profile domain), leaving room for the finite
    difference stencil. For table profiles, radii whose stencil would
    straddle a knot are dropped (the spline's third derivative jumps there).
    """
    if samples < 10:
        raise ValueError('at least 10 samples are required')
    lo, hi = r_range if r_range is not None else space.profile.r_domain
    lo = max(lo, space.r_lo + 3 * FD_STEP)
    hi = min(hi, space.r_hi - 3 * FD_STEP)
    radii = np.linspace(lo, hi, samples + 2)[1:-1]
    profile = space.profile
    if isinstance(profile, TableProfile):
        gap = np.min(np.abs(radii[:, None] - profile.radii[None, :]), axis=1)
        radii = radii[gap > 3 * FD_STEP]
    return radii


def _fd(func, r):
    # Five-point central difference
    h = FD_STEP
    return (func(r - 2 * h) - 8 * func(r - h) + 8 * func(r + h) -
            func(r + 2 * h)) / (12 * h)


def _relative(approx, exact, scale):
    return float(np.max(np.abs(approx - exact) / np.maximum(scale, 1e-300)))


def check_jet(space, samples=100, tolerance=None, r_range=None):
    """
    Check that the jet of the profile is self-consistent: the finite
    differences of w, w′ and w″ match w′, w″ and w‴, each relative to the
    magnitude of the jet at that radius.

    :returns: An :class:`IdentityReport` with one ``jet`` entry
    """
    profile = space.profile
    if tolerance is None:
        tolerance = default_tolerance(profile)
    radii = sample_radii(space, samples, r_range)
    jet = profile.jet(radii)
    scale = np.maximum.reduce([np.abs(x) for x in jet])
    residual = max(
        _relative(_fd(lambda r: profile.jet(r)[k], radii), jet[k + 1], scale)
        for k in range(3))
    report = IdentityReport()
    report.add('jet', residual, radii.size, tolerance)
    return report


def check_conformal_identities(space, samples=100, tolerance=None, r_range=None):
    """
    Check the warped-product forms of the conformal-field identities by
    central differences at step 1e-5:

    (a) ``d/dr(w²/w′²) = 2w(w′² − ww″)/w′³``;
    (b) ``d/dr(w²) = 2ww′``, the radial form of ∇̄|ξ|² = 2φξ;
    (c) ``d/dr((φ² − ξ(φ))/φ) = (w′w″ − ww‴)/w′ − (w′² − ww″)w″/w′²``.

    Residuals are relative to the magnitude of the terms involved. Samples
    where |w′| falls below 1e-8 are skipped for (a) and (c) and counted in
    the entry's note. That the gradient of (φ² − ξ(φ))/φ is radial holds
    identically in a warped product, so (c) checks only its radial part.

    :returns: An :class:`IdentityReport` with entries ``level_derivative``,
        ``xi_norm_gradient`` and ``level_quotient``
    """
    profile = space.profile
    if tolerance is None:
        tolerance = default_tolerance(profile)
    radii = sample_radii(space, samples, r_range)
    w, dw, d2w, d3w = profile.jet(radii)
    keep = np.abs(dw) >= PHI_FLOOR
    skipped = int(radii.size - keep.sum())
    note = '%d samples skipped (w\' ~ 0)' % skipped if skipped else ''
    report = IdentityReport()

    r = radii[keep]
    w_, dw_, d2w_, d3w_ = w[keep], dw[keep], d2w[keep], d3w[keep]
    q = dw_ * dw_ - w_ * d2w_

    def level_sq(s):
        jet = profile.jet(s)
        return (jet.w / jet.dw) ** 2

    exact = 2 * w_ * q / dw_ ** 3
    scale = np.maximum.reduce([
        np.abs(exact), (w_ / dw_) ** 2,
        2 * np.abs(w_) * (dw_ * dw_ + np.abs(w_ * d2w_)) / np.abs(dw_) ** 3])
    report.add('level_derivative', _relative(_fd(level_sq, r), exact, scale) if
               r.size else 0.0, r.size, tolerance, note)

    exact = 2 * w * dw
    report.add('xi_norm_gradient', _relative(
        _fd(lambda s: profile.jet(s).w ** 2, radii), exact,
        np.maximum(np.abs(exact), w * w)), radii.size, tolerance)

    def quotient(s):
        jet = profile.jet(s)
        return (jet.dw ** 2 - jet.w * jet.d2w) / jet.dw

    exact = (dw_ * d2w_ - w_ * d3w_) / dw_ - q * d2w_ / dw_ ** 2
    scale = np.maximum.reduce([
        np.abs(exact), np.abs(d2w_), np.abs(w_ * d3w_ / dw_),
        np.abs(q * d2w_) / dw_ ** 2, np.abs(q / dw_)])
    report.add('level_quotient', _relative(_fd(quotient, r), exact, scale) if
               r.size else 0.0, r.size, tolerance,
               (note + '; ' if note else '') + 'radial component only')
    return report


def check_closed_curvatures(space, samples=100, tolerance=1e-12, r_range=None):
    """
    Check the curvature formulas for a closed conformal field: the radial
    sectional curvature ``−ξ(φ)/|ξ|²`` equals ``−w″/w`` and the
    ``K_rad`` of :func:`~warpflow.ambient.ambient_curvatures`, and
    ``Ric(N,N) = −n·ξ(φ)/|ξ|²``. Both residuals are relative.

    :returns: An :class:`IdentityReport` with entries ``radial_sectional``
        and ``normal_ricci``
    """
    profile = space.profile
    radii = sample_radii(space, samples, r_range)
    w, _, d2w, _ = profile.jet(radii)
    xi_phi = w * d2w
    xi_sq = w * w
    oracle = -xi_phi / xi_sq
    curv = ambient_curvatures(space, radii)

    def rel(a, b):
        scale = np.maximum(np.abs(a), np.abs(b))
        diff = np.abs(a - b)
        return float(np.max(np.where(scale > 0, diff / np.where(
            scale > 0, scale, 1.0), 0.0)))

    report = IdentityReport()
    report.add('radial_sectional', max(
        rel(oracle, -d2w / w), rel(oracle, curv.K_rad)), radii.size,
        tolerance)
    report.add('normal_ricci', rel(space.n * oracle, curv.Ric_NN),
               radii.size, tolerance)
    return report


def check_leaf_volume(space, samples=20, tolerance=1e-8):
    """
    Check the exact antiderivative of wⁿ against adaptive quadrature at
    *samples* radii.

    :returns: An :class:`IdentityReport` with one ``leaf_volume`` entry
    """
    radii = np.linspace(space.r_lo, space.r_hi, samples + 2)[1:-1]
    exact = radial_integral(space, radii)
    oracle = radial_integral(space, radii, method='quad')
    report = IdentityReport()
    report.add('leaf_volume', _relative(exact, oracle, np.abs(oracle)),
               radii.size, tolerance)
    return report


def _fit_order(sizes, residuals):
    slope = np.polyfit(np.log(sizes), np.log(residuals), 1)[0]
    return -float(slope)


def check_minkowski(space, graph, levels=3, min_order=MIN_ORDER,
                    tolerance=1e-3):
    """
    Evaluate the Minkowski residuals of *graph* on its own grid and on grids
    refined by factors 2, 4, ... (resampling the graph spectrally) and fit
    their order of convergence. Graphs within 1e-14 of a leaf are snapped
    to it at every level. An identity passes if its residual vanishes
    to 1e-14 at every level, or if the fitted order is at least 1.9 and the
    finest residual does not exceed *tolerance*.

    :returns: An :class:`IdentityReport` with a ``minkowski_res1`` entry and,
        for n = 2, a ``minkowski_res2`` entry
    """
    if levels < 2:
        raise ValueError('at least 2 refinement levels are required')
    sizes = []
    series = {'res1': [], 'res2': []}
    grid = graph.grid
    for level in range(levels):
        target = grid.refined(2 ** level) if level else grid
        snap = compute_geometry(space, (
            graph.resampled(target) if level else graph).snapped())
        res1, res2 = minkowski_residuals(space, snap)
        sizes.append(target.size)
        series['res1'].append(abs(res1))
        if res2 is not None:
            series['res2'].append(abs(res2))
    report = IdentityReport()
    for name in ('res1', 'res2'):
        values = series[name]
        if not values:
            continue
        if max(values) <= EXACT:
            report.add('minkowski_' + name, values[-1], levels, tolerance,
                       'exact at all levels')
            continue
        order = _fit_order(sizes, np.maximum(values, EXACT))
        report.add(
            'minkowski_' + name, values[-1], levels, tolerance,
            'order %.3f at N=%s' % (order, ','.join(str(s) for s in sizes)),
            passed=order >= min_order and values[-1] <= tolerance)
    return report


def laplace_beltrami(space, graph, values):
    """
    Return the Laplace–Beltrami operator of the induced metric
    ``g = w(ρ)²σ + dρ⊗dρ`` applied to the nodal *values*, assembled in
    divergence form with the metric coefficients averaged at the midpoints
    between nodes.

    For n = 1 this is ``g^(-1/2)∂θ(g^(-1/2)∂θG)``; for n = 2 (axisymmetric)
    it is ``(√det g)⁻¹∂ϑ(w sin ϑ/√g_ϑϑ ∂ϑG)`` with no flux through the poles.
    """
    grid = graph.grid
    h = grid.spacing
    r = graph.rho
    w = space.profile.jet(r).w
    metric = np.sqrt(w * w + sphere.derivative(grid, r) ** 2)
    if grid.n == 1:
        half = 0.5 * (metric + np.roll(metric, -1))
        flux = (np.roll(values, -1) - values) / (h * half)
        return (flux - np.roll(flux, 1)) / (h * metric)
    sin = np.sin(grid.angles)
    coeff = w * sin / metric
    flux = np.zeros(grid.size + 1)
    flux[1:-1] = 0.5 * (coeff[:-1] + coeff[1:]) * np.diff(values) / h
    return np.diff(flux) / (h * metric * w * sin)


def _radial_functions(profile, r):
    # (G, G′, G″) for G = w² and G = (w/w′)²
    w, dw, d2w, d3w = profile.jet(r)
    result = [('xi_sq', (w * w, 2 * w * dw, 2 * dw * dw + 2 * w * d2w))]
    if np.all(dw > 0):
        q = dw * dw - w * d2w
        dq = dw * d2w - w * d3w
        result.append(('level_sq', (
            (w / dw) ** 2,
            2 * w * q / dw ** 3,
            2 * (q / dw ** 2 + w * dq / dw ** 3 -
                 3 * w * q * d2w / dw ** 4))))
    return result


def _consecutive_frames(frames):
    for i in range(len(frames) - 2):
        a, b, c = frames[i:i + 3]
        if b.step == a.step + 1 and c.step == b.step + 1:
            return a, b, c
    raise ValueError('at least 3 consecutive frames are required')


def evolution_frames(space, graph, cfl=0.2, steps=2, r_inner=None):
    """
    Take *steps* explicit flow steps from *graph* (snapped to a leaf if it
    is within 1e-14 of one) and return the list of every
    :data:`~warpflow.flow.Frame`, the initial one included.
    """
    if steps < 2:
        raise ValueError('at least 2 steps are required')
    config = flow.FlowConfig(cfl=cfl, max_steps=steps)
    state = flow.FlowState.initial(space, graph.snapped(), r_inner)
    frames = [flow.Frame(0, 0.0, state.graph.rho.copy())]
    for _ in range(steps):
        state = flow.step(space, state, config)
        frames.append(flow.Frame(
            state.step_count, state.t, state.graph.rho.copy()))
    return frames


def evolution_residuals(space, frames):
    """
    Return ``(residuals, dt, h)`` for the first three consecutive *frames*
    (a list of :data:`~warpflow.flow.Frame`, or a
    :class:`~warpflow.flow.FlowResult` carrying them), where *residuals*
    maps ``'xi_sq'`` (G = w²) and, when w′ > 0, ``'level_sq'``
    (G = (w/w′)²) to the max-norm residual of

        ∂ₜG = uΔ_gG + c(1 − c²)(w′G′ − wG″),    c = 1/v

    with the normal time derivative taken as the centred fixed-angle
    difference divided by v².
    """
    before, middle, after = _consecutive_frames(
        getattr(frames, 'frames', frames))
    grid = sphere.SphereGrid(space.n, middle.rho.size)
    mid = RadialGraph(grid, middle.rho)
    snap = compute_geometry(space, mid)
    span = after.t - before.t
    c = 1 / snap.v
    residuals = {}
    before_g = dict(_radial_functions(space.profile, before.rho))
    after_g = dict(_radial_functions(space.profile, after.rho))
    w, dw = snap.w, snap.phi
    for name, (G, dG, d2G) in _radial_functions(space.profile, middle.rho):
        if name not in before_g or name not in after_g:
            continue
        lhs = (after_g[name][0] - before_g[name][0]) / span / snap.v ** 2
        rhs = (snap.u * laplace_beltrami(space, mid, G) +
               c * (1 - c * c) * (dw * dG - w * d2G))
        residuals[name] = float(np.max(np.abs(lhs - rhs)))
    return residuals, 0.5 * span, grid.spacing


def check_evolution_residual(space, runs):
    """
    Check the evolution equations of |ξ|² and (|ξ|/φ)² along one or more
    runs, ordered from coarsest to finest (typically (N, dt), (2N, dt/4),
    ...). Each run is a list of frames holding at least three consecutive
    steps (see :func:`evolution_frames`), or a
    :class:`~warpflow.flow.FlowResult` captured with ``snapshot_every``.

    The constant C of the bound ``residual ≤ C·(dt + h²)`` is calibrated on
    the coarsest run; an identity passes if every finer run stays within
    4/3 of its bound and the residual decreases under refinement, or if the
    residual vanishes to 1e-14 throughout.

    :raises ValueError: if a run lacks three consecutive frames
    :returns: An :class:`IdentityReport` with entries ``evolution_xi_sq`` and
        (where w′ > 0) ``evolution_level_sq``
    """
    if not runs:
        raise ValueError('at least one run is required')
    measured = [evolution_residuals(space, run) for run in runs]
    report = IdentityReport()
    for name in ('xi_sq', 'level_sq'):
        values = [m[0][name] for m in measured if name in m[0]]
        if len(values) != len(measured):
            continue
        bounds = [dt + h * h for _, dt, h in measured]
        finest = values[-1]
        if max(values) <= EXACT:
            report.add('evolution_' + name, finest, len(values), EXACT,
                       'both sides vanish')
            continue
        constant = values[0] / bounds[0]
        ratios = [a / b for a, b in zip(values, values[1:])]
        passed = all(
            v <= EVOLUTION_SLACK * constant * b
            for v, b in zip(values[1:], bounds[1:])) and all(
                ratio > 1 for ratio in ratios)
        note = 'C=%.3g' % constant
        if ratios:
            note += ' ratios %s' % ','.join('%.2f' % x for x in ratios)
        report.add('evolution_' + name, finest, len(values),
                   EVOLUTION_SLACK * constant * bounds[-1], note,
                   passed=passed)
    return report


def _decay_exponent(t, omega, decades=2.0):
    positive = omega > 0
    t, omega = t[positive], omega[positive]
    if omega.size < 3:
        return None
    # The fit starts at the last record above the two-decade threshold
    above = np.flatnonzero(omega > omega[-1] * 10 ** decades)
    if not above.size:
        return None
    t, omega = t[above[-1]:], omega[above[-1]:]
    if omega.size < 3:
        return None
    slope = np.polyfit(np.log(t + 1), np.log(omega), 1)[0]
    return -float(slope)


def check_run(result, drift_tolerance=1e-5, area_tolerance=1e-12,
              bound_tolerance=1e-6, min_decay=0.5):
    """
    Turn the :class:`~warpflow.flow.RunRecord` of *result* into property
    verdicts:

    ``volume_drift``
        max |V − V₀|/V₀ against *drift_tolerance*
    ``area_monotone``
        the largest increase A(tₖ₊₁) − A(tₖ) relative to A₀
    ``c0_bound``
        the excess of (w/w′)² over its initial range, relative to the
        initial maximum (*bound_tolerance* allowed)
    ``maxH_bound``
        the excess of max H over twice its maximum over the first 10% of the
        run
    ``min_u_bound``
        the shortfall of min u below half its initial value
    ``omega_decay``
        the shortfall of the fitted exponent of max ω ~ (t+1)^(−α) over the
        final two decades of decay below *min_decay*
    ``gap_monotone``
        the largest increase of the isoperimetric gap relative to A₀; r* moves
        with the volume drift, so *drift_tolerance* applies

    When the ambient fails the admissibility conditions the monotonicity
    entries are recorded as observations and always pass.

    :returns: An :class:`IdentityReport`
    """
    # pylint: disable=too-many-locals
    record = result.record
    state = result.state
    rows = len(record)
    observe = not result.conditions.passed
    report = IdentityReport()

    volumes = record.column('V')
    report.add('volume_drift', np.max(np.abs(volumes - state.V0)) / state.V0,
               rows, drift_tolerance)

    def monotone(name, series, tolerance):
        increase = np.diff(series)
        worst = max(0.0, float(increase.max())) if increase.size else 0.0
        if observe:
            report.add(name, worst / state.A0, rows, tolerance,
                       'observation only', passed=True)
        else:
            report.add(name, worst / state.A0, rows, tolerance)

    monotone('area_monotone', record.column('A'), area_tolerance)

    lo, hi = record.column('c0_min'), record.column('c0_max')
    if math.isnan(state.c0_max0) or np.any(np.isnan(hi)):
        report.add('c0_bound', 0.0, rows, bound_tolerance,
                   "undefined where w' <= 0", passed=True)
    else:
        excess = max(
            0.0, float(hi.max()) - state.c0_max0,
            state.c0_min0 - float(lo.min()))
        report.add('c0_bound', excess / state.c0_max0, rows,
                   bound_tolerance)

    max_h = record.column('maxH')
    early = max(1, int(math.ceil(0.1 * rows)))
    reference = float(max_h[:early].max())
    excess = max(0.0, float(max_h.max()) - 2 * reference)
    report.add('maxH_bound', excess / abs(reference) if reference else excess,
               rows, 0.0)

    min_u = record.column('min_u')
    shortfall = max(0.0, 0.5 * min_u[0] - float(min_u.min()))
    report.add('min_u_bound', shortfall / min_u[0], rows, 0.0)

    alpha = _decay_exponent(record.column('t'), record.column('omega_max'))
    if alpha is None:
        report.add('omega_decay', 0.0, rows, 0.0,
                   'fewer than two decades of decay recorded', passed=True)
    else:
        report.add('omega_decay', max(0.0, min_decay - alpha), rows, 0.0,
                   'exponent %.3f' % alpha)

    gaps = np.array(record.gaps, dtype=float)
    gaps = gaps[np.isfinite(gaps)]
    monotone('gap_monotone', gaps, drift_tolerance)
    return report


def run_battery(space, samples=100, tolerance=None):
    """
    Run every profile identity (:func:`check_jet`, :func:`check_conformal_identities`,
    :func:`check_closed_curvatures` and :func:`check_leaf_volume`) on *space*
    and return the merged :class:`IdentityReport`.
    """
    report = IdentityReport()
    report.extend(check_jet(space, samples, tolerance))
    report.extend(check_conformal_identities(space, samples, tolerance))
    report.extend(check_closed_curvatures(space, samples))
    report.extend(check_leaf_volume(space))
    return report
