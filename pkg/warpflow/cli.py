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
This module provides the ``warpflow`` command line front end. Each
sub-command reads a run configuration (see :mod:`warpflow.config`) and
returns an exit status from a fixed contract:

== ==========================================================================
0  success (run converged or was stationary, all checks passed)
1  a check failed (admissibility conditions or identities)
2  a run stopped at t_max or max_steps without converging
3  a run blew up or left the profile domain
64 the configuration (or a file it names) is invalid
== ==========================================================================

The sub-commands are ``run`` (integrate the flow and write the record,
summary and snapshots), ``check`` (print the admissibility conditions),
``verify`` (run the identity battery) and ``profile`` (tabulate the
isoperimetric profile). Every output file starts with a provenance header
holding the package version and the SHA-256 of the configuration, and
identical configurations produce byte-identical outputs.


Functions
=========

.. autofunction:: main

.. autofunction:: cmd_run

.. autofunction:: cmd_check

.. autofunction:: cmd_verify

.. autofunction:: cmd_profile
"""

import io
import os
import sys
import json
import math
import logging
import argparse

import numpy as np

from . import __version__, flow, verify
from .ambient import AmbientError, check_conditions
from .config import RunConfig, ConfigError
from .csv import CSVTarget
from .exc import WarpflowError
from .hypersurface import GeometryError, compute_geometry
from .isoperimetric import IsoProfile
from .progress import RunMeter


EXIT_OK = 0
EXIT_FAILED = 1
EXIT_CAPPED = 2
EXIT_BLOWUP = 3
EXIT_CONFIG = 64

RUN_STATUS = {
    'stationary': EXIT_OK,
    'converged': EXIT_OK,
    'capped': EXIT_CAPPED,
    'blowup': EXIT_BLOWUP,
    'domain_exit': EXIT_BLOWUP,
    }


def _clean(obj):
    # JSON has no NaN, and numpy scalars are not serializable
    if isinstance(obj, dict):
        return {key: _clean(value) for key, value in obj.items()}
    elif isinstance(obj, (list, tuple)):
        return [_clean(value) for value in obj]
    elif isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    elif isinstance(obj, (int, np.integer)):
        return int(obj)
    elif isinstance(obj, (float, np.floating)):
        return float(obj) if math.isfinite(obj) else None
    return obj


def _comments(cfg):
    header = cfg.header()
    return [
        'generator: %s %s' % (header['generator'], header['version']),
        'config_sha256: %s' % header['config_sha256'],
        ]


def write_csv(cfg, path, rows):
    """
    Write the namedtuple *rows* to *path* with the provenance header.
    """
    with io.open(path, 'wb') as outfile:
        with CSVTarget(outfile, header=True,
                       comments=_comments(cfg)) as target:
            for row in rows:
                target.write(row)
    logging.info('Wrote %s', path)


def write_json(cfg, path, document):
    """
    Write *document* to *path* as JSON, preceded by the ``generator`` key.
    """
    data = {'generator': cfg.header()}
    data.update(document)
    with io.open(path, 'w', encoding='utf-8') as outfile:
        json.dump(_clean(data), outfile, indent=2, allow_nan=False)
        outfile.write('\n')
    logging.info('Wrote %s', path)


def _output_dir(cfg, out):
    path = out if out is not None else cfg.resolve(
        cfg['output']['directory'])
    try:
        os.makedirs(path, exist_ok=True)
    except OSError as exc:
        raise cfg.error(str(exc), 'output', 'directory')
    return path


def cmd_run(cfg, out=None, quiet=False):
    """
    Integrate the flow described by *cfg* and write ``record.csv`` (one row
    per recorded step), ``summary.json`` (status, final scalars, r*, area
    gap and run properties) and ``snapshot_<step>.csv`` hypersurface
    snapshots every ``[output] cadence`` steps (the initial and final
    snapshots are always written).

    :returns: 0 if converged or stationary, 2 if capped, 3 on blow-up or
        when a step leaves the profile domain
    """
    # pylint: disable=too-many-locals
    space = cfg.space()
    r_inner = cfg.r_inner(space)
    initial = cfg.initial_graph(space)
    cadence = cfg['output']['cadence']
    config = cfg.flow_config(snapshot_every=cadence)
    formats = cfg.output_formats()
    directory = _output_dir(cfg, out)

    meter = None
    if not quiet:
        meter = RunMeter(t_max=config.t_max)
        meter.show()
    try:
        result = flow.run(space, initial, config, r_inner, meter=meter)
    except flow.BlowUpError as exc:
        logging.error('Blow-up: %s', exc)
        result = exc.result
    except (AmbientError, GeometryError) as exc:
        logging.error('Run stopped: %s', exc)
        result = getattr(exc, 'result', None)
        if result is None:
            return EXIT_BLOWUP
    finally:
        if meter is not None:
            meter.hide()

    summary = dict(result.summary)
    summary['ambient'] = space.params()
    summary['flow'] = config.as_dict()
    summary['gaps'] = list(result.record.gaps)
    summary['properties'] = verify.check_run(result).as_dict()
    logging.info('Run %s after %d steps (t=%g)', result.status,
                 result.state.step_count, result.state.t)

    if 'csv' in formats:
        write_csv(cfg, os.path.join(directory, 'record.csv'), result.record)
        snapshots = [(0, initial)]
        if cadence:
            snapshots.extend(
                (frame.step, initial.__class__(initial.grid, frame.rho))
                for frame in result.frames
                if frame.step and frame.step % cadence == 0)
        snapshots.append(('final', result.state.graph))
        for step, graph in snapshots:
            name = ('snapshot_%s.csv' % step if step == 'final' else
                    'snapshot_%08d.csv' % step)
            write_csv(cfg, os.path.join(directory, name),
                      compute_geometry(space, graph, r_inner).rows())
    if 'json' in formats:
        write_json(cfg, os.path.join(directory, 'summary.json'), summary)
    return RUN_STATUS[result.status]


def cmd_check(cfg, out=None, quiet=False):
    """
    Print the admissibility conditions of the ``[ambient]`` section as a
    table.

    :returns: 0 if every condition passes, 1 otherwise
    """
    # pylint: disable=unused-argument
    space = cfg.space()
    report = check_conditions(space)
    print(report.format())
    return EXIT_OK if report.passed else EXIT_FAILED


def cmd_verify(cfg, out=None, quiet=False):
    """
    Run the identity battery on the ``[ambient]`` section, plus the
    Minkowski refinement study and the evolution residual study on the
    ``[initial]`` graph when enabled in ``[verify]``. The report is printed
    as a table and written to ``verify.json``.

    :returns: 0 if every identity passes, 1 otherwise
    """
    # pylint: disable=unused-argument
    space = cfg.space()
    options = cfg['verify']
    try:
        report = verify.run_battery(
            space, options['samples'], options['tolerance'])
    except ValueError as exc:
        raise cfg.error(str(exc), 'verify', 'samples')
    if options['minkowski'] or options['evolution']:
        graph = cfg.initial_graph(space)
        r_inner = cfg.r_inner(space)
        if options['minkowski']:
            report.extend(verify.check_minkowski(space, graph))
        if options['evolution']:
            cfl = cfg['flow']['cfl']
            steps = options['evolution_steps']
            try:
                runs = [
                    verify.evolution_frames(
                        space, graph.resampled(graph.grid.refined(factor))
                        if factor > 1 else graph, cfl, steps, r_inner)
                    for factor in (1, 2)]
            except ValueError as exc:
                raise cfg.error(str(exc), 'verify', 'evolution_steps')
            report.extend(verify.check_evolution_residual(space, runs))
    print(report.format())
    if 'json' in cfg.output_formats():
        write_json(cfg, os.path.join(_output_dir(cfg, out), 'verify.json'),
                   {'ambient': space.params(), 'report': report.as_dict()})
    return EXIT_OK if report.passed else EXIT_FAILED


def cmd_profile(cfg, radii, out=None, quiet=False):
    """
    Tabulate the isoperimetric profile (r, level value, area, volume) at
    *radii* and write it to ``profile.csv``. The level value w/w′ is left
    blank where w′ ≤ 0.

    :returns: 0
    """
    # pylint: disable=unused-argument
    space = cfg.space()
    try:
        profile = IsoProfile(space, radii, cfg.r_inner(space))
    except (ValueError, AmbientError) as exc:
        raise ConfigError('invalid profile radii: %s' % exc)
    rows = list(profile)
    for row in rows:
        logging.info('r=%.17g level=%s area=%.17g volume=%.17g', row.r,
                     row.level, row.area, row.volume)
    write_csv(cfg, os.path.join(_output_dir(cfg, out), 'profile.csv'), rows)
    return EXIT_OK


def build_parser():
    """
    Return the :class:`argparse.ArgumentParser` of the command line.
    """
    parser = argparse.ArgumentParser(
        prog='warpflow',
        description='Volume-preserving flow of star-shaped hypersurfaces in '
        'warped product spaces')
    parser.add_argument(
        '--version', action='version', version='%(prog)s ' + __version__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        '--config', required=True, metavar='PATH',
        help='the run configuration file')
    common.add_argument(
        '--out', metavar='DIR', default=None,
        help='the output directory (overrides [output] directory)')
    common.add_argument(
        '-q', '--quiet', action='store_true',
        help='only log warnings and errors, and hide the progress meter')
    common.add_argument(
        '--debug', action='store_true', help='log debugging messages')
    commands = parser.add_subparsers(dest='command', metavar='command')
    commands.required = True
    for name, func, text in (
            ('run', cmd_run, 'integrate the flow'),
            ('check', cmd_check, 'check the admissibility conditions'),
            ('verify', cmd_verify, 'run the identity battery'),
            ('profile', cmd_profile, 'tabulate the isoperimetric profile'),
            ):
        sub = commands.add_parser(name, parents=[common], help=text)
        sub.set_defaults(func=func)
        if name == 'profile':
            sub.add_argument(
                '--radii', required=True, type=float, nargs='+',
                metavar='R', help='the coordinate radii to tabulate')
    return parser


def main(args=None):
    """
    The entry point of the ``warpflow`` script; returns the exit status.
    """
    parser = build_parser()
    args = parser.parse_args(args)
    level = (
        logging.DEBUG if args.debug else
        logging.WARNING if args.quiet else
        logging.INFO)
    logging.basicConfig(
        stream=sys.stderr, level=level, format='%(levelname)s: %(message)s')
    logging.captureWarnings(True)
    try:
        cfg = RunConfig.from_path(args.config)
        if args.command == 'profile':
            return args.func(cfg, args.radii, args.out, args.quiet)
        return args.func(cfg, args.out, args.quiet)
    except ConfigError as exc:
        logging.error('%s: %s', args.config, exc)
        return EXIT_CONFIG
    except WarpflowError as exc:
        logging.error('%s', exc)
        return EXIT_CONFIG


if __name__ == '__main__':
    sys.exit(main())
