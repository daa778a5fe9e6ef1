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
import mock

from warpflow import ambient, sphere, hypersurface


@pytest.fixture
def plane():
    return ambient.AmbientSpace(ambient.EuclideanProfile(), n=1)

@pytest.fixture
def sphere2():
    return ambient.AmbientSpace(ambient.SphereProfile(), n=2)

def test_graph_shape():
    grid = sphere.SphereGrid(1, 16)
    with pytest.raises(ValueError):
        hypersurface.RadialGraph(grid, np.ones(8))
    graph = hypersurface.leaf_graph(grid, 2.0)
    assert graph.is_leaf
    assert 'N=16' in repr(graph)

def test_snapped():
    grid = sphere.SphereGrid(1, 16)
    rho = np.full(16, 2.0)
    rho[3] += 4e-15
    graph = hypersurface.RadialGraph(grid, rho)
    assert not graph.is_leaf
    snapped = graph.snapped()
    assert snapped.is_leaf
    assert snapped.rho[0] == pytest.approx(2.0)
    rho[3] += 1e-12
    graph = hypersurface.RadialGraph(grid, rho)
    assert graph.snapped() is graph

def test_fourier_graph():
    grid = sphere.SphereGrid(1, 32)
    graph = hypersurface.fourier_graph(grid, 2.0, [(3, 0.3, 0.0)])
    assert graph.rho == pytest.approx(2 + 0.3 * np.cos(3 * grid.angles))
    with pytest.raises(ValueError):
        hypersurface.fourier_graph(
            sphere.SphereGrid(2, 32), 1.0, [(2, 0.1, 0.5)])

def test_random_fourier_graph():
    grid = sphere.SphereGrid(1, 64)
    one = hypersurface.random_fourier_graph(
        grid, 2.0, 4, 0.1, np.random.default_rng(7))
    two = hypersurface.random_fourier_graph(
        grid, 2.0, 4, 0.1, np.random.default_rng(7))
    assert np.array_equal(one.rho, two.rho)
    assert np.max(np.abs(one.rho - 2.0)) <= 0.1 * 2.0 + 1e-12
    three = hypersurface.random_fourier_graph(
        grid, 2.0, 4, 0.1, np.random.default_rng(8))
    assert not np.array_equal(one.rho, three.rho)

def test_random_fourier_graph_sphere():
    grid = sphere.SphereGrid(2, 32)
    graph = hypersurface.random_fourier_graph(
        grid, 1.0, 3, 0.2, np.random.default_rng(0), r_lo=0.5)
    assert graph.rho.min() >= 1.0 - 0.2 * 0.5 - 1e-12

def test_offcenter_circle():
    grid = sphere.SphereGrid(1, 64)
    graph = hypersurface.offcenter_circle(grid, 0.5, 2.0)
    assert graph.rho[0] == pytest.approx(2.5)
    assert graph.rho[32] == pytest.approx(1.5)
    with pytest.raises(ValueError):
        hypersurface.offcenter_circle(grid, 2.0, 2.0)
    with pytest.raises(ValueError):
        hypersurface.offcenter_circle(sphere.SphereGrid(2, 32), 0.5, 2.0)

def test_leaf_circle(plane):
    grid = sphere.SphereGrid(1, 64)
    snap = hypersurface.compute_geometry(
        plane, hypersurface.leaf_graph(grid, 2.0))
    assert np.all(snap.H == 0.5)
    assert np.all(snap.u == 2.0)
    assert np.all(snap.v == 1.0)
    assert np.max(np.abs(snap.f)) == 0.0
    assert snap.V == pytest.approx(4 * math.pi, rel=1e-14)
    assert snap.A == pytest.approx(4 * math.pi, rel=1e-14)
    assert snap.eta_max == 0.0
    assert snap.omega_max == 0.0
    assert snap.res2 is None
    assert snap.sigma2 is None
    assert abs(snap.res1) <= 1e-14
    assert snap.c0_min == snap.c0_max == 4.0

def test_leaf_sphere(sphere2):
    grid = sphere.SphereGrid(2, 64)
    r = math.pi / 3
    snap = hypersurface.compute_geometry(
        sphere2, hypersurface.leaf_graph(grid, r))
    assert snap.H == pytest.approx(
        np.full(64, 2 / math.tan(r)), rel=1e-12)
    assert snap.V == pytest.approx(2 * math.pi * (r - math.sin(r) * math.cos(r)),
                                   rel=1e-12)
    assert snap.A == pytest.approx(4 * math.pi * math.sin(r) ** 2, rel=1e-12)
    assert snap.deficit == pytest.approx(0, abs=1e-14)
    assert abs(snap.res1) <= 1e-14
    assert abs(snap.res2) <= 1e-14
    assert snap.max_speed <= 1e-14

def test_offcenter_geometry(plane):
    grid = sphere.SphereGrid(1, 256)
    snap = hypersurface.compute_geometry(
        plane, hypersurface.offcenter_circle(grid, 0.5, 2.0))
    assert np.max(np.abs(snap.H - 0.5)) < 1e-3
    # Support function about the origin of a circle centred at a
    assert snap.u[0] == pytest.approx(2.5, abs=1e-3)
    assert snap.f[0] == pytest.approx(-0.25, abs=5e-3)
    assert snap.V == pytest.approx(4 * math.pi, rel=1e-10)
    assert snap.A == pytest.approx(4 * math.pi, rel=1e-4)

def test_perturbed_circle(plane):
    grid = sphere.SphereGrid(1, 128)
    graph = hypersurface.fourier_graph(grid, 2.0, [(3, 0.3, 0.0)])
    snap = hypersurface.compute_geometry(plane, graph)
    # Crests move inward
    assert snap.f[0] < 0
    assert snap.eta_max > 0
    assert snap.omega_max > 0
    assert snap.V == pytest.approx(math.pi * (4 + 0.09 / 2), rel=1e-12)
    rows = list(snap.rows())
    assert len(rows) == 128
    assert rows[0].angle == 0.0
    assert rows[0].rho == pytest.approx(2.3)
    assert set(snap.scalars()) == {
        'V', 'A', 'res1', 'res2', 'eta_max', 'omega_max', 'deficit',
        'maxH', 'min_u', 'c0_min', 'c0_max', 'max_speed'}

def test_sums_use_quadrature(plane):
    grid = sphere.SphereGrid(1, 64)
    graph = hypersurface.fourier_graph(grid, 2.0, [(3, 0.3, 0.0)])
    with mock.patch.object(
            sphere, 'integrate', wraps=sphere.integrate) as integrate:
        snap = hypersurface.compute_geometry(plane, graph)
    # V, A and the two terms of res1
    assert integrate.call_count == 4
    assert snap.A == sphere.integrate(grid, snap.dmu) / grid.measure_ratio
    assert snap.A == pytest.approx(
        hypersurface.surface_area(plane, graph), rel=1e-15)

def test_outside_domain(sphere2):
    grid = sphere.SphereGrid(2, 32)
    with pytest.raises(ambient.DomainError):
        hypersurface.compute_geometry(
            sphere2, hypersurface.leaf_graph(grid, 3.2))

def test_enclosed_volume_inner(plane):
    grid = sphere.SphereGrid(1, 32)
    graph = hypersurface.leaf_graph(grid, 2.0)
    assert hypersurface.enclosed_volume(plane, graph, 1.0) == pytest.approx(
        3 * math.pi)
    with pytest.raises(ValueError):
        hypersurface.enclosed_volume(plane, graph, 2.0)
    assert hypersurface.surface_area(plane, graph) == pytest.approx(
        4 * math.pi)

def test_resampled():
    grid = sphere.SphereGrid(1, 32)
    graph = hypersurface.fourier_graph(grid, 2.0, [(3, 0.3, 0.0)])
    fine = graph.resampled(grid.refined())
    assert fine.grid.size == 64
    assert fine.rho == pytest.approx(
        2 + 0.3 * np.cos(3 * fine.grid.angles), abs=1e-12)

def test_star_shape_error():
    exc = hypersurface.StarShapeError('bad', node=3)
    assert exc.node == 3
    assert isinstance(exc, hypersurface.GeometryError)
