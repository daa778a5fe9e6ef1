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

import numpy as np
import pytest

from warpflow import ambient, sphere, hypersurface, flow, verify


@pytest.fixture
def plane():
    return ambient.AmbientSpace(ambient.EuclideanProfile(), n=1)

@pytest.fixture
def hyperbolic():
    return ambient.AmbientSpace(ambient.HyperbolicProfile(), n=1)

def test_report():
    report = verify.IdentityReport()
    report.add('one', -1e-10, 10, 1e-9)
    report.add('two', 0.5, 10, 1e-9, note='bad')
    report.add('three', 0.5, 10, 1e-9, passed=True)
    assert len(report) == 3
    assert report['one'].residual == 1e-10
    assert report['one'].passed
    assert not report.passed
    assert report.failed == ['two']
    with pytest.raises(KeyError):
        report['four']
    doc = report.as_dict()
    assert doc['passed'] is False
    assert doc['identities'][1]['note'] == 'bad'
    lines = report.format().splitlines()
    assert len(lines) == 4
    assert 'FAIL' in lines[2]

def test_extend():
    one = verify.IdentityReport()
    one.add('a', 0, 1, 1)
    two = verify.IdentityReport()
    two.add('b', 0, 1, 1)
    assert [e.name for e in one.extend(two)] == ['a', 'b']

def test_default_tolerance():
    assert verify.default_tolerance(ambient.SphereProfile()) == 1e-9
    assert verify.default_tolerance(
        ambient.TableProfile([0, 1, 2, 3], [0, 1, 2, 3])) == 1e-4
    assert verify.default_tolerance(
        ambient.PolynomialProfile([1, 1], r_domain=(0, 1))) == 1e-6

def test_sample_radii(plane):
    radii = verify.sample_radii(plane, 20)
    assert radii.size == 20
    assert radii.min() > 0
    assert radii.max() < 50
    with pytest.raises(ValueError):
        verify.sample_radii(plane, 5)

def test_sample_radii_table():
    radii = np.linspace(0, 3, 7)
    space = ambient.AmbientSpace(
        ambient.TableProfile(radii, np.sinh(radii)), n=1)
    samples = verify.sample_radii(space, 61)
    assert samples.size < 61
    assert np.min(np.abs(samples[:, None] - radii[None, :])) > 3e-5

@pytest.mark.parametrize('profile', [
    ambient.EuclideanProfile(),
    ambient.SphereProfile(),
    ambient.HyperbolicProfile(),
    ])
@pytest.mark.parametrize('n', [1, 2])
def test_battery_space_forms(profile, n):
    report = verify.run_battery(ambient.AmbientSpace(profile, n))
    assert report.passed, report.format()
    assert [e.name for e in report] == [
        'jet', 'level_derivative', 'xi_norm_gradient', 'level_quotient', 'radial_sectional',
        'normal_ricci', 'leaf_volume']

def test_battery_polynomial():
    space = ambient.AmbientSpace(
        ambient.PolynomialProfile([0.5, 2.0], r_domain=(0, 3)), n=2)
    report = verify.run_battery(space)
    assert report.passed, report.format()
    assert report['jet'].tolerance == 1e-6

def test_battery_table():
    radii = np.linspace(0, 3, 61)
    space = ambient.AmbientSpace(
        ambient.TableProfile(radii, np.sinh(radii)), n=1)
    report = verify.run_battery(space)
    assert report.passed, report.format()
    assert report['jet'].residual <= 1e-4

def test_battery_corrupt():
    space = ambient.AmbientSpace(
        ambient.HyperbolicProfile(corrupt='d2'), n=1)
    report = verify.run_battery(space)
    assert not report.passed
    assert 'jet' in report.failed
    assert 'level_derivative' in report.failed

def test_conformal_identities_skips_critical_radii():
    space = ambient.AmbientSpace(ambient.SphereProfile(), n=1)
    report = verify.check_conformal_identities(space, samples=99)
    # The middle sample sits on the equator where w' vanishes
    assert 'skipped' in report['level_derivative'].note
    assert report['level_derivative'].samples == 98
    assert report['xi_norm_gradient'].samples == 99
    assert report.passed

def test_closed_curvatures_polynomial():
    space = ambient.AmbientSpace(
        ambient.PolynomialProfile([0, 1, 0, 0.1], r_domain=(0.5, 2)), n=2)
    report = verify.check_closed_curvatures(space)
    assert report.passed

def test_minkowski_leaf(plane):
    grid = sphere.SphereGrid(1, 32)
    report = verify.check_minkowski(plane, hypersurface.leaf_graph(grid, 2.0))
    assert report.passed
    assert report['minkowski_res1'].residual <= 1e-14
    assert report['minkowski_res1'].note == 'exact at all levels'
    with pytest.raises(KeyError):
        report['minkowski_res2']

def test_minkowski_offcenter(plane):
    grid = sphere.SphereGrid(1, 64)
    report = verify.check_minkowski(
        plane, hypersurface.offcenter_circle(grid, 0.5, 2.0))
    assert report.passed, report.format()
    assert report['minkowski_res1'].note.startswith('order ')

def test_minkowski_sphere():
    space = ambient.AmbientSpace(ambient.SphereProfile(), n=2)
    grid = sphere.SphereGrid(2, 32)
    graph = hypersurface.fourier_graph(grid, 1.0, [(2, 0.05, 0.0)])
    report = verify.check_minkowski(space, graph)
    assert report.passed, report.format()
    assert [e.name for e in report] == ['minkowski_res1', 'minkowski_res2']

def test_minkowski_levels(plane):
    grid = sphere.SphereGrid(1, 32)
    with pytest.raises(ValueError):
        verify.check_minkowski(
            plane, hypersurface.leaf_graph(grid, 2.0), levels=1)

def test_laplace_beltrami_leaf():
    space = ambient.AmbientSpace(ambient.SphereProfile(), n=2)
    grid = sphere.SphereGrid(2, 128)
    graph = hypersurface.leaf_graph(grid, math.pi / 2)
    # On the equatorial leaf the induced metric is the round one
    lap = verify.laplace_beltrami(space, graph, np.cos(grid.angles))
    assert np.max(np.abs(lap + 2 * np.cos(grid.angles))) < 2e-3

def test_laplace_beltrami_circle(plane):
    grid = sphere.SphereGrid(1, 128)
    graph = hypersurface.leaf_graph(grid, 2.0)
    lap = verify.laplace_beltrami(plane, graph, np.cos(3 * grid.angles))
    assert np.max(np.abs(lap + 9 / 4 * np.cos(3 * grid.angles))) < 1e-2

def test_evolution_frames(plane):
    grid = sphere.SphereGrid(1, 32)
    frames = verify.evolution_frames(
        plane, hypersurface.fourier_graph(grid, 2.0, [(3, 0.3, 0.0)]))
    assert [frame.step for frame in frames] == [0, 1, 2]
    assert frames[0].t == 0.0
    with pytest.raises(ValueError):
        verify.evolution_frames(
            plane, hypersurface.leaf_graph(grid, 2.0), steps=1)

def test_evolution_leaf(hyperbolic):
    runs = [
        verify.evolution_frames(
            hyperbolic, hypersurface.leaf_graph(sphere.SphereGrid(1, size), 1.0))
        for size in (32, 64)]
    report = verify.check_evolution_residual(hyperbolic, runs)
    assert report.passed
    assert report['evolution_xi_sq'].note == 'both sides vanish'
    assert report['evolution_level_sq'].note == 'both sides vanish'

def test_evolution_perturbed(plane):
    grid = sphere.SphereGrid(1, 64)
    graph = hypersurface.fourier_graph(grid, 2.0, [(3, 0.3, 0.0)])
    runs = [
        verify.evolution_frames(plane, graph),
        verify.evolution_frames(plane, graph.resampled(grid.refined())),
        ]
    report = verify.check_evolution_residual(plane, runs)
    assert report.passed, report.format()
    residuals, dt, h = verify.evolution_residuals(plane, runs[0])
    assert set(residuals) == {'xi_sq', 'level_sq'}
    assert h == pytest.approx(grid.spacing)
    fine, _, _ = verify.evolution_residuals(plane, runs[1])
    assert residuals['xi_sq'] / fine['xi_sq'] >= 3

def test_evolution_from_result(plane):
    grid = sphere.SphereGrid(1, 32)
    graph = hypersurface.fourier_graph(grid, 2.0, [(3, 0.3, 0.0)])
    result = flow.run(plane, graph, flow.FlowConfig(
        max_steps=3, snapshot_every=10))
    residuals, _, _ = verify.evolution_residuals(plane, result)
    assert residuals['xi_sq'] > 0

def test_evolution_no_runs(plane):
    with pytest.raises(ValueError):
        verify.check_evolution_residual(plane, [])
    with pytest.raises(ValueError):
        verify.evolution_residuals(plane, [flow.Frame(0, 0.0, np.ones(8))])

def test_check_run_converged(plane):
    grid = sphere.SphereGrid(1, 64)
    graph = hypersurface.fourier_graph(grid, 2.0, [(3, 0.3, 0.0)])
    result = flow.run(plane, graph, flow.FlowConfig(t_max=50.0))
    report = verify.check_run(result, drift_tolerance=1e-3)
    assert [e.name for e in report] == [
        'volume_drift', 'area_monotone', 'c0_bound', 'maxH_bound',
        'min_u_bound', 'omega_decay', 'gap_monotone']
    assert report['area_monotone'].passed
    assert report['maxH_bound'].passed
    assert report['min_u_bound'].passed
    assert report['volume_drift'].passed
    assert report['c0_bound'].passed
    assert report['omega_decay'].passed
    assert report['omega_decay'].note.startswith('exponent ')
    assert report['gap_monotone'].passed

def test_check_run_observation():
    space = ambient.AmbientSpace(
        ambient.PolynomialProfile([0, 1, 0, 0.1], r_domain=(0.5, 2)), n=1)
    grid = sphere.SphereGrid(1, 32)
    graph = hypersurface.fourier_graph(grid, 1.2, [(3, 0.05, 0.0)])
    with pytest.warns(flow.FlowWarning):
        result = flow.run(space, graph, flow.FlowConfig(max_steps=20))
    report = verify.check_run(result)
    assert report['area_monotone'].passed
    assert report['area_monotone'].note == 'observation only'
    assert report['gap_monotone'].note == 'observation only'

def test_decay_exponent():
    t = np.linspace(0, 20, 50)
    omega = (t + 1) ** -2.0
    assert verify._decay_exponent(t, omega) == pytest.approx(2.0)
    assert verify._decay_exponent(t[:2], omega[:2]) is None
    assert verify._decay_exponent(t, np.ones_like(t)) is None

def test_evolution_sphere():
    space = ambient.AmbientSpace(ambient.SphereProfile(), n=2)
    grid = sphere.SphereGrid(2, 64)
    graph = hypersurface.fourier_graph(grid, 1.0, [(2, 0.05, 0.0)])
    runs = [
        verify.evolution_frames(space, graph),
        verify.evolution_frames(space, graph.resampled(grid.refined())),
        ]
    report = verify.check_evolution_residual(space, runs)
    assert report.passed, report.format()
    coarse, _, _ = verify.evolution_residuals(space, runs[0])
    fine, _, _ = verify.evolution_residuals(space, runs[1])
    assert coarse['xi_sq'] / fine['xi_sq'] >= 3
    assert coarse['level_sq'] / fine['level_sq'] >= 3
