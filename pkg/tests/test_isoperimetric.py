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

from warpflow import ambient, sphere, hypersurface, isoperimetric


@pytest.fixture
def plane():
    return ambient.AmbientSpace(ambient.EuclideanProfile(), n=1)

@pytest.fixture
def sphere2():
    return ambient.AmbientSpace(ambient.SphereProfile(), n=2)

@pytest.fixture
def hyperbolic():
    return ambient.AmbientSpace(ambient.HyperbolicProfile(), n=1)

def test_rstar_plane(plane):
    assert isoperimetric.solve_rstar(plane, 0.0, 4 * math.pi) == pytest.approx(
        2.0, abs=1e-12)

def test_rstar_sphere(sphere2):
    assert isoperimetric.solve_rstar(
        sphere2, None, math.pi ** 2) == pytest.approx(math.pi / 2, abs=1e-12)

def test_rstar_hyperbolic(hyperbolic):
    target = 2 * math.pi * (math.cosh(1) - 1)
    assert isoperimetric.solve_rstar(
        hyperbolic, 0.0, target) == pytest.approx(1.0, abs=1e-12)

def test_rstar_inner(plane):
    # Annulus between r = 1 and r = 2
    assert isoperimetric.solve_rstar(plane, 1.0, 3 * math.pi) == pytest.approx(
        2.0, abs=1e-12)

def test_rstar_range(plane, sphere2):
    with pytest.raises(isoperimetric.RangeError):
        isoperimetric.solve_rstar(plane, 0.0, 0.0)
    with pytest.raises(isoperimetric.RangeError):
        isoperimetric.solve_rstar(plane, 0.0, -1.0)
    with pytest.raises(isoperimetric.RangeError):
        isoperimetric.solve_rstar(sphere2, 0.0, 2 * math.pi ** 2 + 1)

def test_level_value(plane, sphere2):
    assert isoperimetric.level_value(plane, 2.0) == 2.0
    assert isoperimetric.level_value(sphere2, 1.0) == pytest.approx(
        math.tan(1))
    assert isoperimetric.level_value(sphere2, 2.0) is None

def test_iso_report_leaf(plane):
    grid = sphere.SphereGrid(1, 64)
    report = isoperimetric.iso_report(
        plane, hypersurface.leaf_graph(grid, 2.0))
    assert report.r_star == pytest.approx(2.0, abs=1e-12)
    assert report.gap == pytest.approx(0, abs=1e-10 * report.A)
    assert report.equality
    assert report.near_leaf

def test_iso_report_offcenter(plane):
    grid = sphere.SphereGrid(1, 256)
    report = isoperimetric.iso_report(
        plane, hypersurface.offcenter_circle(grid, 0.5, 2.0))
    assert report.r_star == pytest.approx(2.0, abs=1e-9)
    assert abs(report.gap) <= 1e-4 * report.A
    assert report.equality
    assert not report.near_leaf

def test_iso_report_perturbed(plane):
    grid = sphere.SphereGrid(1, 256)
    report = isoperimetric.iso_report(
        plane, hypersurface.fourier_graph(grid, 2.0, [(3, 0.3, 0.0)]))
    assert report.r_star == pytest.approx(math.sqrt(4.045), abs=1e-12)
    assert report.gap > 1e-2
    assert not report.equality

def test_iso_report_sphere():
    space = ambient.AmbientSpace(ambient.SphereProfile(), n=2)
    grid = sphere.SphereGrid(2, 64)
    graph = hypersurface.fourier_graph(grid, 1.0, [(2, 0.05, 0.0)])
    report = isoperimetric.iso_report(space, graph)
    assert report.gap > 0
    assert report.A > report.area_star

def test_profile_plane(plane):
    rows = list(isoperimetric.IsoProfile(plane, [1.0, 2.0]))
    assert rows[1] == isoperimetric.ProfileRow(
        2.0, 2.0, pytest.approx(4 * math.pi), pytest.approx(4 * math.pi))
    assert rows[0].volume == pytest.approx(math.pi)

def test_profile_sphere(sphere2):
    profile = isoperimetric.IsoProfile(sphere2, [math.pi / 2, 2.0])
    rows = list(profile)
    assert rows[0].area == pytest.approx(4 * math.pi)
    assert rows[0].volume == pytest.approx(math.pi ** 2)
    assert rows[1].level is None
    assert profile.volume_at(math.pi / 2) == pytest.approx(math.pi ** 2)

def test_profile_hyperbolic(hyperbolic):
    rows = list(isoperimetric.IsoProfile(hyperbolic, 1.0))
    assert len(rows) == 1
    assert rows[0].area == pytest.approx(2 * math.pi * math.sinh(1))
    assert rows[0].level == pytest.approx(math.tanh(1))

def test_profile_bad_radii(plane):
    with pytest.raises(ValueError):
        isoperimetric.IsoProfile(plane, [0.0, 1.0])
    with pytest.raises(ValueError):
        isoperimetric.IsoProfile(plane, [1.0], r_inner=1.0)
    with pytest.raises(ambient.DomainError):
        isoperimetric.IsoProfile(plane, [60.0])

def test_profile_monotone(hyperbolic):
    profile = isoperimetric.IsoProfile(hyperbolic, np.linspace(0.1, 4, 40))
    assert np.all(np.diff(profile.areas) > 0)
    assert np.all(np.diff(profile.volumes) > 0)

@pytest.mark.parametrize('profile, mean', [
    (ambient.EuclideanProfile(), 1.0),
    (ambient.SphereProfile(r_domain=(0, math.pi / 2)), 1.0),
    (ambient.HyperbolicProfile(), 1.0),
    ])
@pytest.mark.parametrize('n', [1, 2])
def test_iso_random_graphs(profile, mean, n):
    space = ambient.AmbientSpace(profile, n)
    grid = sphere.SphereGrid(n, 128)
    rng = np.random.default_rng(2026)
    for _ in range(10):
        graph = hypersurface.random_fourier_graph(grid, mean, 4, 0.1, rng)
        report = isoperimetric.iso_report(space, graph)
        assert report.gap >= -1e-4 * report.A
        assert report.A > 0
