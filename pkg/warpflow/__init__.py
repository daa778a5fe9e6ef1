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
A typical warpflow script builds an ambient space from a warping function,
places a star-shaped hypersurface in it as a radial graph, and runs the
volume-preserving flow until the hypersurface settles on a coordinate
sphere. A short script flowing a perturbed circle in the plane is shown
below::

    from warpflow import ambient, sphere, hypersurface, flow

    space = ambient.AmbientSpace(ambient.EuclideanProfile(), n=1)
    grid = sphere.SphereGrid(1, 128)
    initial = hypersurface.fourier_graph(grid, 2.0, [(3, 0.3, 0.0)])
    result = flow.run(space, initial, flow.FlowConfig())
    print(result.status, result.summary['r_star'])

Going through this section by section we can see the following:

#. The :class:`~warpflow.ambient.AmbientSpace` couples a warping function
   w(r) (here the flat profile w = r) with the dimension n of the
   hypersurfaces moving in it (n = 1 for curves, n = 2 for axisymmetric
   surfaces).

#. The :class:`~warpflow.sphere.SphereGrid` discretizes the unit sphere Sⁿ
   over which hypersurfaces are written as radial graphs r = ρ(x).

#. :func:`~warpflow.hypersurface.fourier_graph` builds the initial graph
   ρ(θ) = 2 + 0.3 cos 3θ.

#. :func:`~warpflow.flow.run` integrates the flow until max η and the flow
   speed fall below their thresholds, and returns a
   :class:`~warpflow.flow.FlowResult` whose summary holds the radius r* of
   the coordinate sphere enclosing the same volume.


Checking an ambient space
=========================

The monotonicity of area along the flow depends on conditions on the warping
function. These can be checked before a run::

    from warpflow import ambient

    space = ambient.AmbientSpace(
        ambient.PolynomialProfile([0, 1, 0, 0.1], r_domain=(0.5, 2)), n=1)
    print(ambient.check_conditions(space).format())

Runs in spaces that fail the conditions still proceed, with a
:class:`~warpflow.flow.FlowWarning`.


Command line
============

The ``warpflow`` script drives the same machinery from a configuration file
(see :doc:`config`)::

    $ warpflow run --config circle.ini --out results/
    $ warpflow check --config sphere.ini
    $ warpflow verify --config hyperbolic.ini
    $ warpflow profile --config euclidean.ini --radii 1 2 3
"""

__version__ = '0.1.0'
