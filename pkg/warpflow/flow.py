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
This module integrates the flow ``∂F/∂t = (nφ − uH)ν`` for radial graphs. In
the graph representation the flow reduces to the scalar equation
``∂ₜρ = f·v`` with ``f = n·w′(ρ) − uH``, which :func:`step` advances by one
explicit Euler step under a parabolic step-size restriction and :func:`run`
iterates until the graph settles on a leaf.

The volume enclosed by the graph is invariant under the flow and, when the
ambient satisfies the admissibility conditions, the area is non-increasing;
both are recorded in the :class:`RunRecord` along with the other diagnostics
of each recorded step.


Classes
=======

.. autoclass:: FlowConfig
   :members:

.. autoclass:: FlowState
   :members:

.. autoclass:: RunRecord
   :members:

.. autoclass:: FlowResult
   :members:


Functions
=========

.. autofunction:: speed

.. autofunction:: step

.. autofunction:: run


Exceptions
==========

.. autoexception:: FlowError

.. autoexception:: BlowUpError

.. autoexception:: FlowWarning


Examples
========

Flowing a perturbed circle in the plane to a round circle::

    from warpflow import ambient, sphere, hypersurface, flow

    space = ambient.AmbientSpace(ambient.EuclideanProfile(), n=1)
    grid = sphere.SphereGrid(1, 128)
    initial = hypersurface.fourier_graph(grid, 2.0, [(3, 0.3, 0.0)])
    result = flow.run(space, initial, flow.FlowConfig())
    print(result.status, result.summary['r_star'])
"""

import math
import logging
import warnings
from collections import namedtuple

import numpy as np

from .ambient import AmbientError, check_conditions
from .hypersurface import GeometryError, compute_geometry
from .isoperimetric import solve_rstar, iso_report, RangeError
from .exc import WarpflowError, WarpflowWarning


RecordRow = namedtuple('RecordRow', (
    't', 'V', 'A', 'res1', 'res2', 'eta_max', 'omega_max', 'deficit', 'maxH',
    'min_u', 'c0_min', 'c0_max', 'max_speed', 'dt'))
Speed = namedtuple('Speed', ('f', 'drho'))
Frame = namedtuple('Frame', ('step', 't', 'rho'))


class FlowError(WarpflowError):
    """
    Base class for errors raised while integrating the flow.
    """


class BlowUpError(FlowError):
    """
    Raised when an explicit step produces non-finite radii, or moves the
    graph further than the configured ``max_jump`` in a single step (the
    signature of an unstable step size).

    :param str message: The error message
    :param int step: The number of the step that failed
    :param int node: The index of the first offending node
    """
    def __init__(self, message, step=None, node=None):
        self.step = step
        self.node = node
        self.result = None
        super(BlowUpError, self).__init__(message)

    def __str__(self):
        result = super(BlowUpError, self).__str__()
        if self.step is not None:
            result = 'Step %d: %s' % (self.step, result)
        return result


class FlowWarning(WarpflowWarning):
    """
    Warning raised when a run starts outside the hypotheses that guarantee
    monotone area, or with a step-size factor outside the stable range.
    """


class FlowConfig(object):
    """
    Parameters of a flow run.

    :param float cfl: Safety factor of the parabolic step restriction; values
        outside (0, 0.5] are accepted with a :class:`FlowWarning`
    :param float t_max: Maximum simulated time
    :param int max_steps: Maximum number of steps
    :param float stop_eta: Convergence threshold for max η
    :param float stop_speed: Convergence threshold for max|f|, relative to
        max w′ over the graph
    :param int record_every: Steps between :class:`RunRecord` rows
    :param float max_jump: Largest permitted single-step displacement as a
        fraction of the mean radius
    :param int snapshot_every: Steps between captured frame triples (0
        disables frame capture)
    """
    # pylint: disable=too-many-instance-attributes,too-few-public-methods

    def __init__(
            self, cfl=0.2, t_max=100.0, max_steps=1000000, stop_eta=1e-8,
            stop_speed=1e-10, record_every=100, max_jump=0.05,
            snapshot_every=0):
        # pylint: disable=too-many-arguments
        if not cfl > 0:
            raise ValueError('cfl must be positive')
        if cfl > 0.5:
            warnings.warn(FlowWarning(
                'cfl=%g exceeds the stable range (0, 0.5]' % cfl))
        for name, value in (
                ('t_max', t_max), ('stop_eta', stop_eta),
                ('stop_speed', stop_speed), ('max_jump', max_jump)):
            if not value > 0:
                raise ValueError('%s must be positive' % name)
        if max_steps < 1 or record_every < 1 or snapshot_every < 0:
            raise ValueError('step counts must be positive')
        self.cfl = float(cfl)
        self.t_max = float(t_max)
        self.max_steps = int(max_steps)
        self.stop_eta = float(stop_eta)
        self.stop_speed = float(stop_speed)
        self.record_every = int(record_every)
        self.max_jump = float(max_jump)
        self.snapshot_every = int(snapshot_every)

    def as_dict(self):
        """
        Return the configuration as a dict.
        """
        return dict(vars(self))


class FlowState(object):
    """
    One time slice of a run: the time *t*, the *graph*, the step *dt* that
    produced it, the *step_count*, the baselines ``V0``, ``A0``, ``c0_min0``
    and ``c0_max0`` measured at t = 0, and the cached *snapshot* (the
    :class:`~warpflow.hypersurface.GeometrySnapshot` of *graph*).
    """
    # pylint: disable=too-many-instance-attributes,too-few-public-methods

    def __init__(self, t, graph, dt, step_count, baseline, snapshot,
                 r_inner):
        # pylint: disable=too-many-arguments
        self.t = t
        self.graph = graph
        self.dt = dt
        self.step_count = step_count
        self.V0, self.A0, self.c0_min0, self.c0_max0 = baseline
        self.snapshot = snapshot
        self.r_inner = r_inner

    @classmethod
    def initial(cls, space, graph, r_inner=None):
        """
        Return the state at t = 0 for *graph*, measuring the baselines.
        """
        if r_inner is None:
            r_inner = space.r_lo
        snap = compute_geometry(space, graph, r_inner)
        return cls(0.0, graph, 0.0, 0,
                   (snap.V, snap.A, snap.c0_min, snap.c0_max), snap, r_inner)

    @property
    def baseline(self):
        """
        The ``(V0, A0, c0_min0, c0_max0)`` baselines.
        """
        return (self.V0, self.A0, self.c0_min0, self.c0_max0)

    @property
    def volume_drift(self):
        """
        The relative volume drift ``|V − V0|/V0``.
        """
        return abs(self.snapshot.V - self.V0) / self.V0


class RunRecord(object):
    """
    The time series of diagnostics of a run. Each row is a :data:`RecordRow`
    whose fields are the CSV columns ``t, V, A, res1, res2, eta_max,
    omega_max, deficit, maxH, min_u, c0_min, c0_max, max_speed, dt``. The
    isoperimetric gap of each row is kept in :attr:`gaps`.
    """

    def __init__(self):
        self.rows = []
        self.gaps = []

    def __len__(self):
        return len(self.rows)

    def __iter__(self):
        return iter(self.rows)

    def __getitem__(self, index):
        return self.rows[index]

    def append(self, space, state):
        """
        Append the row describing *state*.
        """
        snap = state.snapshot
        self.rows.append(RecordRow(
            state.t, snap.V, snap.A, snap.res1, snap.res2, snap.eta_max,
            snap.omega_max, snap.deficit, snap.maxH, snap.min_u, snap.c0_min,
            snap.c0_max, snap.max_speed, state.dt))
        try:
            r_star = solve_rstar(space, state.r_inner, snap.V)
        except RangeError:
            self.gaps.append(float('nan'))
        else:
            self.gaps.append(
                snap.A - space.sphere_area *
                space.profile.jet(r_star).w ** space.n)

    def column(self, name):
        """
        Return the named column as an array (None entries become NaN).
        """
        index = RecordRow._fields.index(name)
        return np.array([
            np.nan if row[index] is None else row[index]
            for row in self.rows], dtype=float)


class FlowResult(object):
    """
    The outcome of :func:`run`.

    .. attribute:: status

        ``'stationary'`` (initial data already converged), ``'converged'``,
        ``'capped'`` (t_max or max_steps reached), ``'blowup'`` or
        ``'domain_exit'`` (a step left the profile domain or lost
        star-shapedness)

    .. attribute:: state

        The final :class:`FlowState`

    .. attribute:: record

        The :class:`RunRecord`

    .. attribute:: frames

        Captured :data:`Frame` tuples (see ``snapshot_every``)

    .. attribute:: conditions

        The :class:`~warpflow.ambient.ConditionReport` checked before the run

    .. attribute:: summary

        A dict of final results
    """
    # pylint: disable=too-few-public-methods,too-many-arguments

    def __init__(self, space, status, state, record, frames, conditions,
                 config):
        self.space = space
        self.status = status
        self.state = state
        self.record = record
        self.frames = frames
        self.conditions = conditions
        self.config = config
        self.summary = self._summarize()

    @property
    def converged(self):
        """
        True if the run ended on a leaf.
        """
        return self.status in ('stationary', 'converged')

    def _summarize(self):
        state = self.state
        snap = state.snapshot
        volumes = self.record.column('V')
        result = {
            'status': self.status,
            'steps': state.step_count,
            't': state.t,
            'V0': state.V0,
            'A0': state.A0,
            'volume_drift': float(
                np.max(np.abs(volumes - state.V0)) / state.V0),
            'final': snap.scalars(),
            'conditions_passed': self.conditions.passed,
            'r_star': None,
            'mean_rho_error': None,
            'area_star': None,
            'area_gap': None,
            }
        if self.converged:
            # The limit leaf is measured against the initial volume, the gap
            # against the final one so that volume drift is not counted
            r_star = solve_rstar(self.space, state.r_inner, state.V0)
            mean_rho = math.fsum(state.graph.rho) / state.graph.grid.size
            report = iso_report(self.space, state.graph, state.r_inner)
            result.update({
                'r_star': r_star,
                'mean_rho_error': abs(mean_rho - r_star),
                'area_star': report.area_star,
                'area_gap': report.gap,
                })
        return result


def speed(space, state):
    """
    Return the nodal normal speed ``f = n·w′ − uH`` and the radial velocity
    ``∂ₜρ = f·v`` of *state* as a ``(f, drho)`` tuple.
    """
    snap = state.snapshot
    if snap is None:
        snap = compute_geometry(space, state.graph, state.r_inner)
    return Speed(snap.f, snap.f * snap.v)


def step_size(snapshot, cfl):
    """
    Return the explicit step ``cfl·h²·min(v²w²/u)``. The effective diffusion
    coefficient of the linearized equation is u/(v²w²) = 1/(wv³).
    """
    s = snapshot
    h = s.grid.spacing
    return cfl * h * h * float(np.min(s.v * s.v * s.w * s.w / s.u))


def step(space, state, config):
    """
    Advance *state* by one explicit Euler step ``ρ ← ρ + dt·f·v`` and return
    the new :class:`FlowState`. Leaves are stationary and are not integrated;
    only their time advances.

    :raises BlowUpError: if the update is not finite or exceeds the permitted
        single-step displacement
    :raises DomainError: if the updated graph leaves the profile domain
    :raises StarShapeError: if the updated graph is no longer star-shaped
    """
    graph = state.graph
    snap = state.snapshot
    if snap is None:
        snap = compute_geometry(space, graph, state.r_inner)
    dt = step_size(snap, config.cfl)
    count = state.step_count + 1
    if graph.is_leaf:
        return FlowState(state.t + dt, graph, dt, count, state.baseline,
                         snap, state.r_inner)
    delta = dt * snap.f * snap.v
    rho = graph.rho + delta
    bad = np.flatnonzero(~np.isfinite(rho))
    if bad.size:
        raise BlowUpError(
            'non-finite radius at node %d' % bad[0], count, int(bad[0]))
    jump = np.abs(delta)
    limit = config.max_jump * float(np.mean(np.abs(graph.rho)))
    if jump.max() > limit:
        node = int(np.argmax(jump))
        raise BlowUpError(
            'displacement %.3g at node %d exceeds %.3g' % (
                jump[node], node, limit), count, node)
    new_graph = graph.__class__(graph.grid, rho)
    return FlowState(
        state.t + dt, new_graph, dt, count, state.baseline,
        compute_geometry(space, new_graph, state.r_inner), state.r_inner)


def _settled(snapshot, config):
    threshold = config.stop_speed * float(np.max(np.abs(snapshot.phi)))
    return (snapshot.eta_max <= config.stop_eta and
            snapshot.max_speed <= threshold)


def run(space, initial, config, r_inner=None, meter=None):
    """
    Run the flow from the radial graph *initial* until it settles on a leaf
    (max η <= ``stop_eta`` and max|f| <= ``stop_speed``·max w′), or until
    ``t_max`` or ``max_steps`` is reached.

    The admissibility conditions of the ambient are checked first over
    [min ρ, max ρ] of *initial*, the radii the flow can reach since the
    extremes of ρ move inward; if any fails a :class:`FlowWarning` is issued
    and the run proceeds. A graph
    within 1e-14 of a leaf is snapped to that leaf before integration.

    :param float r_inner: The inner radius for enclosed volumes (defaults to
        r_lo)
    :param meter: An optional object with an ``update(t, steps, eta)``
        method (such as :class:`~warpflow.progress.RunMeter`), called after
        each step
    :raises BlowUpError: on numerical blow-up
    :raises DomainError: if a step takes the graph out of the profile domain
    :raises StarShapeError: if a step makes the graph lose star-shapedness

    Each of these carries the partial :class:`FlowResult` (status
    ``'blowup'`` or ``'domain_exit'``) as its ``result`` attribute.
    :returns: A :class:`FlowResult`
    """
    # pylint: disable=too-many-arguments
    conditions = check_conditions(
        space, r_range=(float(initial.rho.min()), float(initial.rho.max())))
    if not conditions.passed:
        warnings.warn(FlowWarning(
            'ambient fails %s; area monotonicity is not guaranteed' %
            ', '.join(conditions.failed)))
    graph = initial.snapped()
    state = FlowState.initial(space, graph, r_inner)
    record = RunRecord()
    record.append(space, state)
    frames = []
    every = config.snapshot_every
    if every:
        frames.append(Frame(0, 0.0, graph.rho.copy()))
    logging.debug('Starting run: V0=%.17g A0=%.17g', state.V0, state.A0)
    status = None
    try:
        while True:
            if _settled(state.snapshot, config):
                status = 'converged' if state.step_count else 'stationary'
                break
            if (state.t >= config.t_max or
                    state.step_count >= config.max_steps):
                status = 'capped'
                break
            state = step(space, state, config)
            count = state.step_count
            if every and count % every in (0, 1, 2):
                frames.append(Frame(count, state.t, state.graph.rho.copy()))
            if count % config.record_every == 0:
                record.append(space, state)
                logging.debug(
                    'Step %d t=%.6g dt=%.3g eta=%.3g', count, state.t,
                    state.dt, state.snapshot.eta_max)
            if meter is not None:
                meter.update(
                    state.t, count, state.snapshot.eta_max)
    except (BlowUpError, AmbientError, GeometryError) as exc:
        # state is the last valid slice; the failed step never produced one
        if record[-1].t != state.t:
            record.append(space, state)
        exc.result = FlowResult(
            space, 'blowup' if isinstance(exc, BlowUpError) else
            'domain_exit', state, record, frames, conditions, config)
        raise
    if record[-1].t != state.t:
        record.append(space, state)
    logging.debug('Run finished: %s after %d steps', status,
                  state.step_count)
    return FlowResult(space, status, state, record, frames, conditions,
                      config)
