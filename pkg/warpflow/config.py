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
This module reads run configurations: INI-style text files with the sections
``[ambient]``, ``[grid]``, ``[initial]``, ``[flow]``, ``[output]``,
``[verify]`` and ``[run]``. A complete example is documented in
:doc:`config`.

The :class:`RunConfig` class is the major element that this module provides.
:meth:`RunConfig.load` parses a file with :mod:`configparser`, recovers the
line of each key and converts each value through the converter registered
for its key in :data:`KEYS`. The methods :meth:`~RunConfig.space`,
:meth:`~RunConfig.initial_graph` and :meth:`~RunConfig.flow_config` turn the
parsed values into the package's objects; every failure, whether syntactic
or semantic, is raised as a :class:`ConfigError` carrying the line number,
section and key it concerns.


Classes
=======

.. autoclass:: RunConfig
   :members:


Exceptions
==========

.. autoexception:: ConfigError

.. autoexception:: ConfigWarning


Examples
========

Loading a configuration and building its objects::

    import io
    from warpflow import config

    with io.open('circle.ini', 'rb') as f:
        cfg = config.RunConfig.load(f, base='.')
    space = cfg.space()
    initial = cfg.initial_graph(space)
"""

import io
import os
import re
import hashlib
import logging
import warnings
import configparser

import numpy as np

from . import hypersurface, flow
from .ambient import AmbientSpace, TableProfile, AmbientError, make_profile
from .csv import CSVSource
from .exc import WarpflowError, WarpflowWarning
from .sphere import SphereGrid


class ConfigError(WarpflowError):
    """
    Raised for any error in a run configuration.

    :param str message: The error message
    :param int line_number: The 1-based line of the file concerned, if known
    :param str section: The section concerned, if known
    :param str key: The key concerned, if known
    """
    def __init__(self, message, line_number=None, section=None, key=None):
        self.line_number = line_number
        self.section = section
        self.key = key
        super(ConfigError, self).__init__(message)

    def __str__(self):
        result = super(ConfigError, self).__str__()
        if self.key:
            result = '%s: %s' % (self.key, result)
        if self.section:
            result = '[%s] %s' % (self.section, result)
        if self.line_number:
            result = 'Line %d: %s' % (self.line_number, result)
        return result


class ConfigWarning(WarpflowWarning):
    """
    Raised for ignorable problems in a configuration (such as unknown keys).
    """


NUMBER_RE = re.compile(r'^[-+]?(\d+\.?\d*|\.\d+)([eE][-+]?\d+)?$')
INTEGER_RE = re.compile(r'^[-+]?\d+$')
SEPARATOR_RE = re.compile(r'[\s,]+')


def _float(value):
    if not NUMBER_RE.match(value):
        raise ValueError('expected a decimal number, found %r' % value)
    return float(value)


def _int(value):
    if not INTEGER_RE.match(value):
        raise ValueError('expected an integer, found %r' % value)
    return int(value)


def _bool(value):
    try:
        return {
            'true': True, 'yes': True, 'on': True, '1': True,
            'false': False, 'no': False, 'off': False, '0': False,
            }[value.lower()]
    except KeyError:
        raise ValueError('expected a boolean, found %r' % value)


def _floats(value):
    return [_float(item) for item in SEPARATOR_RE.split(value) if item]


def _words(value):
    return [item for item in SEPARATOR_RE.split(value) if item]


def _modes(value):
    # "k amplitude phase; k amplitude phase; ..."
    result = []
    for part in value.split(';'):
        items = [item for item in SEPARATOR_RE.split(part) if item]
        if not items:
            continue
        if len(items) != 3:
            raise ValueError(
                'a mode is "wavenumber amplitude phase", found %r' %
                part.strip())
        result.append((_int(items[0]), _float(items[1]), _float(items[2])))
    return result


def _path(value):
    if not value:
        raise ValueError('expected a path')
    return value


def _choice(*choices):
    def convert(value):
        if value not in choices:
            raise ValueError('expected one of %s, found %r' % (
                ', '.join(choices), value))
        return value
    return convert


#: The converter of every recognized key, by section
KEYS = {
    'ambient': {
        'family': _choice(
            'euclidean', 'sphere', 'hyperbolic', 'polynomial', 'table'),
        'n': _int,
        'r_domain': _floats,
        'scale': _float,
        'coefficients': _floats,
        'table': _path,
        'r_inner': _float,
        'corrupt': _choice('none', 'd2'),
        },
    'grid': {
        'N': _int,
        },
    'initial': {
        'kind': _choice(
            'leaf', 'fourier', 'random', 'offcenter_circle', 'table'),
        'radius': _float,
        'mean': _float,
        'modes': _modes,
        'count': _int,
        'amplitude': _float,
        'a': _float,
        'R': _float,
        'file': _path,
        },
    'flow': {
        'cfl': _float,
        't_max': _float,
        'max_steps': _int,
        'stop_eta': _float,
        'stop_speed': _float,
        'record_every': _int,
        'max_jump': _float,
        },
    'output': {
        'directory': _path,
        'cadence': _int,
        'formats': _words,
        },
    'verify': {
        'samples': _int,
        'tolerance': _float,
        'minkowski': _bool,
        'evolution': _bool,
        'evolution_steps': _int,
        },
    'run': {
        'seed': _int,
        },
    }

#: The value of every key not given in a file
DEFAULTS = {
    'ambient': {
        'family': 'euclidean', 'n': 1, 'r_domain': None, 'scale': 1.0,
        'coefficients': None, 'table': None, 'r_inner': None,
        'corrupt': 'none',
        },
    'grid': {'N': 256},
    'initial': {
        'kind': 'leaf', 'radius': 1.0, 'mean': 1.0, 'modes': [], 'count': 4,
        'amplitude': 0.1, 'a': 0.0, 'R': 1.0, 'file': None,
        },
    'flow': {
        'cfl': 0.2, 't_max': 100.0, 'max_steps': 1000000, 'stop_eta': 1e-8,
        'stop_speed': 1e-10, 'record_every': 100, 'max_jump': 0.05,
        },
    'output': {'directory': '.', 'cadence': 0, 'formats': ['csv', 'json']},
    'verify': {
        'samples': 100, 'tolerance': None, 'minkowski': True,
        'evolution': True, 'evolution_steps': 2,
        },
    'run': {'seed': 0},
    }


class RunConfig(object):
    """
    A parsed run configuration.

    Section values are available by indexing (``cfg['flow']['cfl']``).
    The SHA-256 digest of the file's bytes is kept in :attr:`digest` and
    relative paths in the file are resolved against *base*.

    :param dict sections: Values overriding :data:`DEFAULTS`, by section
    :param str digest: The hex digest of the source file
    :param str base: The directory relative paths are resolved against
    :param dict lines: The line number of each ``(section, key)`` given;
        section headers are keyed with a key of ``None``
    """

    def __init__(self, sections=None, digest=None, base=None, lines=None):
        self.sections = {
            name: dict(values) for name, values in DEFAULTS.items()}
        for name, values in (sections or {}).items():
            self.sections[name].update(values)
        self.digest = digest
        self.base = base or '.'
        self.lines = lines or {}

    def __getitem__(self, section):
        return self.sections[section]

    @classmethod
    def load(cls, fileobj, base=None):
        """
        Parse the configuration in the binary file-like object *fileobj*.

        :raises ConfigError: for malformed lines, unknown sections, duplicate
            keys and unconvertible values
        """
        data = fileobj.read()
        digest = hashlib.sha256(data).hexdigest()
        try:
            text = data.decode('utf-8')
        except UnicodeDecodeError as exc:
            raise ConfigError('configuration is not UTF-8: %s' % exc)
        parser = configparser.ConfigParser(
            delimiters=('=',), comment_prefixes=('#', ';'),
            inline_comment_prefixes=('#',), strict=True,
            empty_lines_in_values=False, interpolation=None)
        parser.optionxform = str
        try:
            parser.read_string(text)
        except configparser.MissingSectionHeaderError as exc:
            raise ConfigError(
                'key outside any section', line_number=exc.lineno)
        except configparser.DuplicateSectionError as exc:
            raise ConfigError(
                'duplicate section', line_number=exc.lineno,
                section=exc.section)
        except configparser.DuplicateOptionError as exc:
            raise ConfigError(
                'duplicate key', line_number=exc.lineno,
                section=exc.section, key=exc.option)
        except configparser.ParsingError as exc:
            num, line = exc.errors[0]
            raise ConfigError(
                'expected "[section]" or "key = value", found %s' % line,
                line_number=num)
        lines = cls._positions(parser, text)
        sections = {}
        for (section, key), num in sorted(lines.items(), key=lambda i: i[1]):
            sections.setdefault(section, {})
            if key is None:
                continue
            if key not in KEYS[section]:
                warnings.warn(ConfigWarning(
                    'Line %d: [%s] %s: unknown key ignored' % (
                        num, section, key)))
                continue
            try:
                sections[section][key] = KEYS[section][key](
                    parser.get(section, key))
            except ValueError as exc:
                raise ConfigError(
                    str(exc), line_number=num, section=section, key=key)
        logging.debug('Loaded configuration %s', digest)
        return cls(sections, digest, base, lines)

    @staticmethod
    def _positions(parser, text):
        # configparser keeps no positions; recover the line of each section
        # header (keyed with a None key) and of each key parser accepted
        lines = {}
        section = None
        for num, line in enumerate(text.splitlines(), start=1):
            line = line.strip()
            if not line or line[0] in '#;':
                continue
            match = parser.SECTCRE.match(line)
            if match:
                section = match.group('header')
                if section not in KEYS:
                    raise ConfigError(
                        'unknown section', line_number=num, section=section)
                lines.setdefault((section, None), num)
                continue
            match = parser.OPTCRE.match(line)
            if match:
                key = match.group('option').strip()
                if parser.has_option(section, key):
                    lines.setdefault((section, key), num)
        return lines

    @classmethod
    def from_path(cls, path):
        """
        Load the configuration file at *path*, resolving relative paths
        against its directory.
        """
        try:
            with io.open(path, 'rb') as fileobj:
                return cls.load(fileobj, os.path.dirname(path))
        except (IOError, OSError) as exc:
            raise ConfigError('cannot read %s: %s' % (path, exc))

    def error(self, message, section=None, key=None):
        """
        Return a :class:`ConfigError` positioned at the line where *key* of
        *section* was given (if it was).
        """
        return ConfigError(
            message, line_number=self.lines.get((section, key)),
            section=section, key=key)

    def resolve(self, path):
        """
        Return *path* resolved against the configuration's directory.
        """
        return os.path.join(self.base, path)

    def header(self):
        """
        Return the provenance header embedded in every output file.
        """
        from . import __version__
        return {
            'generator': 'warpflow',
            'version': __version__,
            'config_sha256': self.digest,
            }

    def space(self):
        """
        Construct the :class:`~warpflow.ambient.AmbientSpace` of the
        ``[ambient]`` section.

        :raises ConfigError: if the profile is invalid
        """
        amb = self['ambient']
        if amb['n'] not in (1, 2):
            raise self.error('n must be 1 or 2', 'ambient', 'n')
        r_domain = amb['r_domain']
        if r_domain is not None and len(r_domain) != 2:
            raise self.error(
                'r_domain takes two radii', 'ambient', 'r_domain')
        corrupt = None if amb['corrupt'] == 'none' else amb['corrupt']
        key = 'family'
        try:
            if amb['family'] == 'table':
                key = 'table'
                if amb['table'] is None:
                    raise self.error(
                        'table profile requires a table file', 'ambient',
                        'table')
                with io.open(self.resolve(amb['table']), 'rb') as fileobj:
                    profile = TableProfile.from_csv(
                        fileobj, scale=amb['scale'], corrupt=corrupt)
            else:
                profile = make_profile(
                    amb['family'], r_domain=r_domain, scale=amb['scale'],
                    coefficients=amb['coefficients'], corrupt=corrupt)
        except ConfigError:
            raise
        except (AmbientError, ValueError) as exc:
            raise self.error(str(exc), 'ambient', key)
        except (IOError, OSError) as exc:
            raise self.error(str(exc), 'ambient', 'table')
        except WarpflowError as exc:
            raise self.error(str(exc), 'ambient', key)
        return AmbientSpace(profile, amb['n'])

    def r_inner(self, space):
        """
        Return the inner radius for enclosed volumes (r_lo by default).
        """
        r_inner = self['ambient']['r_inner']
        if r_inner is None:
            return space.r_lo
        if not space.r_lo <= r_inner < space.r_hi:
            raise self.error(
                'r_inner must lie in the profile domain', 'ambient',
                'r_inner')
        return r_inner

    def grid(self, space):
        """
        Construct the :class:`~warpflow.sphere.SphereGrid` of ``[grid]``.
        """
        try:
            return SphereGrid(space.n, self['grid']['N'])
        except ValueError as exc:
            raise self.error(str(exc), 'grid', 'N')

    def rng(self):
        """
        Return the seeded :class:`numpy.random.Generator` of ``[run]``.
        """
        return np.random.default_rng(self['run']['seed'])

    def initial_graph(self, space, grid=None):
        """
        Construct the initial :class:`~warpflow.hypersurface.RadialGraph` of
        the ``[initial]`` section on *grid* (by default the ``[grid]``
        grid), and check that it lies above the inner radius, inside the
        profile domain and is star-shaped.

        :raises ConfigError: if the initial data is invalid
        """
        if grid is None:
            grid = self.grid(space)
        init = self['initial']
        kind = init['kind']
        try:
            if kind == 'leaf':
                graph = hypersurface.leaf_graph(grid, init['radius'])
            elif kind == 'fourier':
                graph = hypersurface.fourier_graph(
                    grid, init['mean'], init['modes'])
            elif kind == 'random':
                graph = hypersurface.random_fourier_graph(
                    grid, init['mean'], init['count'], init['amplitude'],
                    self.rng(), r_lo=self.r_inner(space))
            elif kind == 'offcenter_circle':
                if space.n != 1 or space.profile.family != 'euclidean':
                    raise ValueError(
                        'off-center circles require a euclidean ambient '
                        'with n = 1')
                graph = hypersurface.offcenter_circle(
                    grid, init['a'], init['R'])
            else:
                graph = self._table_graph(grid)
        except ValueError as exc:
            raise self.error(str(exc), 'initial', 'kind')
        r_inner = self.r_inner(space)
        if not graph.rho.min() > r_inner:
            raise self.error(
                'initial data must lie above r_inner=%g' % r_inner,
                'initial', 'kind')
        try:
            hypersurface.compute_geometry(space, graph, r_inner)
        except (AmbientError, hypersurface.GeometryError) as exc:
            raise self.error(str(exc), 'initial', 'kind')
        return graph

    def _table_graph(self, grid):
        path = self['initial']['file']
        if path is None:
            raise self.error(
                'table initial data requires a file', 'initial', 'file')
        try:
            with io.open(self.resolve(path), 'rb') as fileobj:
                with CSVSource(fileobj) as source:
                    rows = [row[:2] for row in source]
        except (IOError, OSError, WarpflowError) as exc:
            raise self.error(str(exc), 'initial', 'file')
        if len(rows) < 2:
            raise self.error(
                'table initial data needs at least 2 rows', 'initial',
                'file')
        angles, radii = (np.array(column) for column in zip(*rows))
        order = np.argsort(angles)
        angles, radii = angles[order], radii[order]
        if grid.n == 1:
            rho = np.interp(grid.angles, angles, radii, period=2 * np.pi)
        else:
            rho = np.interp(grid.angles, angles, radii)
        return hypersurface.RadialGraph(grid, rho)

    def flow_config(self, snapshot_every=0):
        """
        Construct the :class:`~warpflow.flow.FlowConfig` of ``[flow]``.
        """
        values = self['flow']
        try:
            return flow.FlowConfig(snapshot_every=snapshot_every, **values)
        except ValueError as exc:
            raise self.error(str(exc), 'flow')

    def output_formats(self):
        """
        Return the set of requested output formats.
        """
        formats = set(self['output']['formats'])
        unknown = formats - {'csv', 'json'}
        if unknown:
            raise self.error(
                'unknown formats %s' % ', '.join(sorted(unknown)),
                'output', 'formats')
        return formats
