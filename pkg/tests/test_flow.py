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


import math
import warnings

import numpy as np
import pytest
import mock

from warpflow import ambient, sphere, hypersurface, flow


@pytest.fixture
def plane():
    return ambient.AmbientSpace(ambient.EuclideanProfile(), n=1)

@pytest.fixture
def perturbed():
    grid = sphere.SphereGrid(1, 64)
    return hypersurface.fourier_graph(grid, 2.0, [(3, 0.3, 0.0)])

def test_config_defaults():
    config = flow.FlowConfig()
    assert config.cfl == 0.2
    assert config.t_max == 100.0
    assert config.stop_eta == 1e-8
    assert config.stop_speed == 1e-10
    assert config.as_dict()['record_every'] == 100

def test_config_bad():
    with pytest.raises(ValueError):
        flow.FlowConfig(cfl=0)
    with pytest.raises(ValueError):
        flow.FlowConfig(t_max=-1)
    with pytest.raises(ValueError):
        flow.FlowConfig(stop_eta=0)
    with pytest.raises(ValueError):
        flow.FlowConfig(record_every=0)
    with pytest.raises(ValueError):
        flow.FlowConfig(snapshot_every=-1)

def test_config_unstable_cfl():
    with pytest.warns(flow.FlowWarning):
        config = flow.FlowConfig(cfl=0.6)
    assert config.cfl == 0.6

def test_speed_leaf(plane):
    grid = sphere.SphereGrid(1, 32)
    state = flow.FlowState.initial(plane, hypersurface.leaf_graph(grid, 2.0))
    f, drho = flow.speed(plane, state)
    assert np.all(f == 0)
    assert np.all(drho == 0)

def test_speed_sphere_leaf():
    space = ambient.AmbientSpace(ambient.SphereProfile(), n=2)
    grid = sphere.SphereGrid(2, 32)
    state = flow.FlowState.initial(space, hypersurface.leaf_graph(grid, 1.0))
    assert np.max(np.abs(flow.speed(space, state).drho)) <= 1e-12

def test_step_size(plane):
    grid = sphere.SphereGrid(1, 32)
    snap = hypersurface.compute_geometry(
        plane, hypersurface.leaf_graph(grid, 2.0))
    assert flow.step_size(snap, 0.2) == pytest.approx(
        0.2 * grid.spacing ** 2 * 2.0)

def test_step_leaf(plane):
    grid = sphere.SphereGrid(1, 32)
    state = flow.FlowState.initial(plane, hypersurface.leaf_graph(grid, 2.0))
    after = flow.step(plane, state, flow.FlowConfig())
    assert after.step_count == 1
    assert after.t == pytest.approx(0.2 * grid.spacing ** 2 * 2.0)
    assert np.array_equal(after.graph.rho, state.graph.rho)
    assert after.baseline == state.baseline

def test_step_perturbed(plane):
    grid = sphere.SphereGrid(1, 256)
    graph = hypersurface.fourier_graph(grid, 2.0, [(3, 0.3, 0.0)])
    state = flow.FlowState.initial(plane, graph)
    after = flow.step(plane, state, flow.FlowConfig())
    assert after.snapshot.A < state.snapshot.A
    assert after.volume_drift <= 1e-6
    assert after.dt == pytest.approx(flow.step_size(state.snapshot, 0.2))
    # Crests move in, troughs move out
    assert after.graph.rho[0] < state.graph.rho[0]
    assert after.graph.rho[43] > state.graph.rho[43]

def test_step_blowup(plane):
    grid = sphere.SphereGrid(1, 256)
    graph = hypersurface.fourier_graph(grid, 2.0, [(3, 0.3, 0.0)])
    with pytest.warns(flow.FlowWarning):
        config = flow.FlowConfig(cfl=5.0)
    state = flow.FlowState.initial(plane, graph)
    with pytest.raises(flow.BlowUpError) as exc:
        for _ in range(200):
            state = flow.step(plane, state, config)
    assert exc.value.step <= 200
    assert str(exc.value).startswith('Step %d: ' % exc.value.step)

def test_run_leaf(plane):
    grid = sphere.SphereGrid(1, 32)
    result = flow.run(plane, hypersurface.leaf_graph(grid, 2.0),
                      flow.FlowConfig())
    assert result.status == 'stationary'
    assert result.converged
    assert result.state.step_count == 0
    assert len(result.record) == 1
    assert result.summary['r_star'] == pytest.approx(2.0, abs=1e-12)
    assert result.summary['area_gap'] == pytest.approx(0, abs=1e-10)
    assert result.summary['volume_drift'] == 0.0

def test_run_snaps_near_leaf(plane):
    grid = sphere.SphereGrid(1, 32)
    rho = np.full(32, 2.0)
    rho[5] += 5e-15
    result = flow.run(plane, hypersurface.RadialGraph(grid, rho),
                      flow.FlowConfig())
    assert result.status == 'stationary'
    assert result.state.graph.is_leaf

def test_run_perturbed_circle(plane, perturbed):
    result = flow.run(plane, perturbed, flow.FlowConfig(t_max=50.0))
    assert result.status == 'converged'
    summary = result.summary
    assert summary['final']['eta_max'] <= 1e-8
    assert summary['volume_drift'] <= 1e-3
    assert summary['mean_rho_error'] <= 1e-3
    areas = result.record.column('A')
    assert np.all(np.diff(areas) <= 1e-12 * summary['A0'])
    assert areas[-1] < areas[0]
    assert result.record[-1].t == result.state.t
    assert result.conditions.passed

def test_run_offcenter_circle(plane):
    grid = sphere.SphereGrid(1, 64)
    result = flow.run(plane, hypersurface.offcenter_circle(grid, 0.5, 2.0),
                      flow.FlowConfig(t_max=100.0))
    assert result.status == 'converged'
    rho = result.state.graph.rho
    assert np.mean(rho) == pytest.approx(2.0, abs=1e-3)
    assert np.ptp(rho) <= 1e-3
    areas = result.record.column('A')
    assert np.max(areas) - np.min(areas) <= 1e-3 * areas[0]

def test_run_sphere():
    space = ambient.AmbientSpace(ambient.SphereProfile(), n=2)
    grid = sphere.SphereGrid(2, 128)
    graph = hypersurface.fourier_graph(grid, math.pi / 3, [(2, 0.05, 0.0)])
    # Only the band of radii the graph occupies is checked, and that band
    # stays inside the hemisphere where phi > 0
    with warnings.catch_warnings():
        warnings.simplefilter('error', flow.FlowWarning)
        result = flow.run(space, graph, flow.FlowConfig(t_max=50.0))
    assert result.status == 'converged'
    assert result.conditions.passed
    assert result.conditions.radii.min() > math.pi / 3 - 0.05
    assert result.conditions.radii.max() < math.pi / 3 + 0.05
    assert result.summary['final']['deficit'] <= 1e-6
    r_star = result.summary['r_star']
    H = result.state.snapshot.H
    assert np.max(np.abs(H - 2 / math.tan(r_star))) <= 1e-3
    areas = result.record.column('A')
    assert np.all(np.diff(areas) <= 1e-10 * areas[0])

def test_run_sphere_past_equator():
    space = ambient.AmbientSpace(ambient.SphereProfile(), n=2)
    grid = sphere.SphereGrid(2, 32)
    graph = hypersurface.fourier_graph(grid, math.pi / 2, [(2, 0.1, 0.0)])
    with pytest.warns(flow.FlowWarning):
        result = flow.run(space, graph, flow.FlowConfig(max_steps=5))
    assert not result.conditions.passed
    assert 'phi_positive' in result.conditions.failed

def test_volume_drift_order(plane):
    drifts = []
    for size in (128, 256):
        grid = sphere.SphereGrid(1, size)
        graph = hypersurface.fourier_graph(grid, 2.0, [(3, 0.3, 0.0)])
        # Doubling N at a fixed cfl quarters the step
        result = flow.run(plane, graph, flow.FlowConfig(
            t_max=0.5, record_every=10))
        assert result.status == 'capped'
        volumes = result.record.column('V')
        drifts.append(np.max(np.abs(volumes - result.state.V0)))
    assert drifts[1] > 0
    assert drifts[0] / drifts[1] >= 3.5

def test_run_capped(plane, perturbed):
    result = flow.run(plane, perturbed, flow.FlowConfig(t_max=0.01))
    assert result.status == 'capped'
    assert not result.converged
    assert result.summary['r_star'] is None
    assert result.state.t >= 0.01
    assert result.record[-1].t == result.state.t

def test_run_max_steps(plane, perturbed):
    result = flow.run(plane, perturbed, flow.FlowConfig(max_steps=5))
    assert result.status == 'capped'
    assert result.state.step_count == 5

def test_run_blowup(plane):
    grid = sphere.SphereGrid(1, 256)
    graph = hypersurface.fourier_graph(grid, 2.0, [(3, 0.3, 0.0)])
    with warnings.catch_warnings():
        warnings.simplefilter('ignore', flow.FlowWarning)
        config = flow.FlowConfig(cfl=5.0, record_every=1)
    with pytest.raises(flow.BlowUpError) as exc:
        flow.run(plane, graph, config)
    result = exc.value.result
    assert result.status == 'blowup'
    assert result.summary['r_star'] is None
    assert len(result.record) >= 1

def test_run_domain_exit():
    space = ambient.AmbientSpace(ambient.EuclideanProfile(r_domain=(0, 3)), n=1)
    grid = sphere.SphereGrid(1, 256)
    # A seeded grid-scale mode grows by an order of magnitude per step
    graph = hypersurface.fourier_graph(
        grid, 2.0, [(3, 0.3, 0.0), (128, 1e-6, 0.0)])
    with warnings.catch_warnings():
        warnings.simplefilter('ignore', flow.FlowWarning)
        config = flow.FlowConfig(cfl=5.0, max_jump=100.0, record_every=1)
    with pytest.raises((ambient.AmbientError, hypersurface.GeometryError)) as exc:
        flow.run(space, graph, config)
    result = exc.value.result
    assert result.status == 'domain_exit'
    assert not result.converged
    assert result.summary['area_gap'] is None
    assert 0 < result.state.step_count < 200
    assert result.record[-1].t == result.state.t
    assert 0 < result.state.graph.rho.min() < result.state.graph.rho.max() < 3

def test_run_gap_uses_final_volume(plane, perturbed):
    result = flow.run(plane, perturbed, flow.FlowConfig(t_max=50))
    assert result.status == 'converged'
    assert result.summary['area_gap'] == pytest.approx(
        result.record.gaps[-1], abs=1e-12)
    assert abs(result.summary['area_gap']) <= 1e-10
    assert result.summary['mean_rho_error'] <= 1e-3

def test_run_meter(plane, perturbed):
    meter = mock.Mock()
    flow.run(plane, perturbed, flow.FlowConfig(max_steps=3), meter=meter)
    assert meter.update.call_count == 3

def test_run_frames(plane, perturbed):
    config = flow.FlowConfig(max_steps=12, snapshot_every=5)
    result = flow.run(plane, perturbed, config)
    assert [frame.step for frame in result.frames] == [0, 1, 2, 5, 6, 7, 10, 11, 12]
    assert np.array_equal(result.frames[0].rho, perturbed.rho)

def test_record_columns(plane, perturbed):
    result = flow.run(plane, perturbed, flow.FlowConfig(
        max_steps=10, record_every=2))
    record = result.record
    assert len(record) == 6
    assert len(record.gaps) == 6
    assert np.isnan(record.column('res2')).all()
    assert record.column('t')[0] == 0.0
    assert record[0]._fields[0] == 't'
