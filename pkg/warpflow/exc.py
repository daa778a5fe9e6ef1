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
The root of the package's exception and warning hierarchy. Each module
defines its own subclasses next to the code that raises them:

:exc:`~warpflow.ambient.AmbientError`
    A warping profile cannot be evaluated
    (:exc:`~warpflow.ambient.DomainError`,
    :exc:`~warpflow.ambient.SingularPointError`) or is invalid
    (:exc:`~warpflow.ambient.ProfileError`).

:exc:`~warpflow.hypersurface.GeometryError`
    A graph is not star-shaped (:exc:`~warpflow.hypersurface.StarShapeError`).

:exc:`~warpflow.flow.FlowError`
    A run blew up (:exc:`~warpflow.flow.BlowUpError`).

:exc:`~warpflow.isoperimetric.RangeError`
    No coordinate sphere encloses the target volume.

:exc:`~warpflow.config.ConfigError`
    A run configuration is invalid.

:exc:`~warpflow.csv.CSVError`
    A numeric table cannot be read.

Bad arguments (mismatched sizes, too few samples) raise :exc:`ValueError`
instead. The command line reports any :exc:`WarpflowError` that escapes a
command and exits with status 64.


Exceptions
==========

.. autoexception:: WarpflowError

.. autoexception:: WarpflowWarning
"""


class WarpflowError(Exception):
    """
    Base of every error the package raises about profiles, geometry, runs or
    input files; catch it to handle all of them at once.
    """


class WarpflowWarning(Warning):
    """
    Base of every warning the package issues, such as a run started where
    the admissibility conditions fail.
    """
