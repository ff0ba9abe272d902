# Copyright (C) 2026 The dualpinn developers
#
# This file is part of dualpinn.
#
# dualpinn is free software: you can redistribute it and/or modify it under
# the terms of the GNU General Public License as published by the Free Software
# Foundation, either version 3 of the License, or (at your option) any later
# version.
#
# dualpinn is distributed in the hope that it will be useful, but WITHOUT ANY
# WARRANTY; without even the implied warranty of MERCHANTABILITY or FITNESS FOR
# A PARTICULAR PURPOSE.  See the GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License along with
# dualpinn.  If not, see <http://www.gnu.org/licenses/>.

"""Command line front end: ``dualpinn run|sweep|ablate|report``

Exit status is 0 on success, 1 when training aborted and 2 for usage or
configuration errors.
"""

import argparse as _argparse
import logging as _logging
import os.path as _os_path
import sys as _sys

from . import __version__
from . import config as _config
from . import error as _error
from .bench import records as _records
from .bench import report as _report
from .bench import sweep as _sweep


_LOG = _logging.getLogger(__name__)

EXIT_OK = 0
EXIT_TRAINING = 1
EXIT_USAGE = 2


def seed_list(text):
    """Parse ``40,42,44`` (or ``40-48:2``) into a list of seeds

    >>> seed_list('40,42,44')
    [40, 42, 44]
    >>> seed_list('40-48:2')
    [40, 42, 44, 46, 48]
    """
    seeds = []
    for part in text.split(','):
        part = part.strip()
        if not part:
            continue
        try:
            if '-' in part:
                span, _, step = part.partition(':')
                first, last = span.split('-')
                seeds.extend(range(int(first), int(last) + 1, int(step or 1)))
            else:
                seeds.append(int(part))
        except ValueError:
            raise _argparse.ArgumentTypeError(
                'invalid seed list {!r}'.format(text))
    return seeds


def load(args):
    """The experiment named by ``--config`` with command line overrides
    """
    path = args.config
    if not _os_path.isfile(path) and _os_path.isfile(
            _config.preset_path(path)):
        path = _config.preset_path(path)
    experiment = _config.load_config(path)
    return _config.apply_overrides(
        experiment, seed=getattr(args, 'seed', None),
        epoch_scale=args.epoch_scale)


def cmd_run(args):
    experiment = load(args)
    row = _sweep.run_experiment(
        experiment, out=args.out, timing=args.timing)
    if row['status'] != _records.OK:
        print('{} {}'.format(row['run_id'], row['status']))
        return EXIT_TRAINING
    print('{} {} {} seed {}: rel L2 {:.4g}, MAE {:.4g}'.format(
        row['run_id'], row['problem'], row['mode'], row['seed'],
        row['rel_l2'], row['mae']))
    return EXIT_OK


def _print_summary(label, summary):
    cells = []
    for metric in ['mae', 'rel_l2', 'boundary_l2']:
        mean, std = summary.aggregate(metric)
        if mean is not None:
            cells.append('{} {:.4g} ± {:.4g}'.format(
                metric, mean, std))
    print('{} (n={}, failed {}): {}'.format(
        label, summary.n, len(summary.failed), ', '.join(cells)))


def cmd_sweep(args):
    if not args.seeds:
        raise _error.ConfigurationError('empty seed list')
    experiment = load(args)
    summary = _sweep.sweep(
        experiment, args.seeds, jobs=args.jobs, out=args.out,
        timing=args.timing, ddof=args.ddof)
    _print_summary(_sweep.mode(experiment), summary)
    if not summary.n:
        return EXIT_TRAINING
    return EXIT_OK


def cmd_ablate(args):
    if not args.seeds:
        raise _error.ConfigurationError('empty seed list')
    experiment = load(args)
    summaries = _sweep.ablate(
        experiment, args.seeds, jobs=args.jobs, out=args.out,
        variants=args.variants, timing=args.timing, ddof=args.ddof)
    for variant, summary in summaries:
        _print_summary(variant, summary)
    if not any(summary.n for _, summary in summaries):
        return EXIT_TRAINING
    return EXIT_OK


def cmd_report(args):
    print(_report.report(
        args.results, ddof=args.ddof, compare_modes=args.compare))
    return EXIT_OK


def cmd_presets(args):
    for name in _config.presets():
        print(name)
    return EXIT_OK


def _add_config_args(parser, seeds=False):
    parser.add_argument(
        '--config', required=True,
        help='experiment file or packaged preset name')
    parser.add_argument(
        '--out', default='results', help='output directory (%(default)s)')
    parser.add_argument(
        '--epoch-scale', type=float, default=None,
        help='multiply every phase budget')
    parser.add_argument(
        '--timing', action='store_true',
        help='record wall-clock times (results are then not reproducible)')
    if seeds:
        parser.add_argument(
            '--seeds', type=seed_list, required=True,
            help='comma separated seeds, or FIRST-LAST[:STEP]')
        parser.add_argument(
            '--jobs', type=int, default=1,
            help='worker processes, capped by $DUALPINN_THREADS')
        parser.add_argument(
            '--ddof', type=int, choices=[0, 1], default=1,
            help='1 for the sample, 0 for the population std')
    else:
        parser.add_argument('--seed', type=int, default=None)


def parser():
    main_parser = _argparse.ArgumentParser(
        prog='dualpinn', description=__doc__.splitlines()[0])
    main_parser.add_argument(
        '--version', action='version',
        version='%(prog)s {}'.format(__version__))
    main_parser.add_argument(
        '-v', '--verbose', action='count', default=0,
        help='log INFO (-v) or DEBUG (-vv) messages')
    commands = main_parser.add_subparsers(dest='command')

    run = commands.add_parser('run', help='train one experiment')
    _add_config_args(run)
    run.set_defaults(func=cmd_run)

    sweep = commands.add_parser('sweep', help='train over several seeds')
    _add_config_args(sweep, seeds=True)
    sweep.set_defaults(func=cmd_sweep)

    ablate = commands.add_parser(
        'ablate', help='run the ablation grid over several seeds')
    _add_config_args(ablate, seeds=True)
    ablate.add_argument(
        '--variants', nargs='+', choices=_config.ABLATIONS, default=None)
    ablate.set_defaults(func=cmd_ablate)

    report = commands.add_parser('report', help='tabulate results')
    report.add_argument('results', help='results directory')
    report.add_argument(
        '--compare', nargs=2, metavar=('MODE_A', 'MODE_B'),
        help='percentage change of the means from MODE_A to MODE_B')
    report.add_argument('--ddof', type=int, choices=[0, 1], default=1)
    report.set_defaults(func=cmd_report)

    presets = commands.add_parser('presets', help='list packaged presets')
    presets.set_defaults(func=cmd_presets)
    return main_parser


def main(argv=None):
    args = parser().parse_args(argv)
    if not args.command:
        parser().print_usage(_sys.stderr)
        return EXIT_USAGE
    level = {0: _logging.WARNING, 1: _logging.INFO}.get(
        args.verbose, _logging.DEBUG)
    _logging.getLogger('dualpinn').setLevel(level)
    try:
        return args.func(args)
    except (_error.ConfigurationError, _error.ContractViolation) as e:
        _sys.stderr.write('dualpinn: {}\n'.format(e))
        return EXIT_USAGE
    except _error.TrainingAborted as e:
        _sys.stderr.write('dualpinn: training aborted: {}\n'.format(e))
        return EXIT_TRAINING


if __name__ == '__main__':
    _sys.exit(main())
