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

"""Text tables of sweep results

One table per (problem, mode) group: a row per seed, then the
``mean ± std`` row, columns in the order MAE, RMSE, Rel. L2, Accuracy,
BC L2, PDE L2.

>>> rows = [
...     {'problem': 'POISSON', 'mode': 'dual-two-phase', 'seed': 40,
...      'status': 'ok', 'mae': 0.002, 'rel_l2': 0.05},
...     {'problem': 'POISSON', 'mode': 'dual-two-phase', 'seed': 42,
...      'status': 'ok', 'mae': 0.004, 'rel_l2': 0.07},
...     ]
>>> summary = group(rows)[('POISSON', 'dual-two-phase')]
>>> round(summary.mean('mae'), 12), summary.n
(0.003, 2)
"""

import collections as _collections
import logging as _logging

from .. import error as _error
from . import metrics as _metrics
from . import records as _records
from . import sweep as _sweep


_LOG = _logging.getLogger(__name__)


def group(rows, ddof=1):
    """``{(problem, mode): SweepSummary}`` in first-seen order
    """
    groups = _collections.OrderedDict()
    for row in rows:
        key = (row['problem'], row['mode'])
        groups.setdefault(key, []).append(row)
    return _collections.OrderedDict(
        (key, _sweep.SweepSummary(sorted(
            members, key=lambda r: (r.get('seed') is None, r.get('seed'))),
            ddof=ddof))
        for key, members in groups.items())


def _number(value):
    if value is None:
        return 'NA'
    return '{:.4g}'.format(value)


def render_table(problem, mode, summary):
    """Markdown table of one group
    """
    header = ['Seed'] + [_metrics.LABELS[m] for m in _metrics.METRICS]
    lines = [
        '{} ({})'.format(problem, mode),
        '',
        '| ' + ' | '.join(header) + ' |',
        '|' + '|'.join(['---'] * len(header)) + '|',
        ]
    for row in summary.rows:
        if row['status'] == _records.OK:
            cells = [_number(row.get(m)) for m in _metrics.METRICS]
        else:
            cells = [row['status']] + [''] * (len(_metrics.METRICS) - 1)
        lines.append('| {} | {} |'.format(row.get('seed'), ' | '.join(cells)))
    cells = []
    for metric in _metrics.METRICS:
        mean, std = summary.aggregate(metric)
        if mean is None:
            cells.append('NA')
        else:
            cells.append('{} ± {}'.format(_number(mean), _number(std)))
    lines.append('| **Mean ± Std** (n={}) | {} |'.format(
        summary.n, ' | '.join(cells)))
    return '\n'.join(lines)


def render(rows, ddof=1):
    groups = group(rows, ddof=ddof)
    return '\n\n'.join(
        render_table(problem, mode, summary)
        for (problem, mode), summary in groups.items())


def compare(summary_a, summary_b):
    """Percentage change of each mean metric from ``summary_a`` to ``summary_b``

    >>> a = _sweep.SweepSummary([{'status': 'ok', 'rel_l2': 0.5}])
    >>> b = _sweep.SweepSummary([{'status': 'ok', 'rel_l2': 0.05}])
    >>> round(compare(a, b)['rel_l2'], 10)
    -90.0
    """
    changes = _collections.OrderedDict()
    for metric in _metrics.METRICS:
        a = summary_a.mean(metric)
        b = summary_b.mean(metric)
        if a is None or b is None or a == 0:
            changes[metric] = None
        else:
            changes[metric] = 100.0 * (b - a) / abs(a)
    return changes


def render_comparison(rows, mode_a, mode_b, ddof=1):
    """One line per problem holding both modes
    """
    groups = group(rows, ddof=ddof)
    problems = []
    for problem, mode in groups:
        if problem not in problems:
            problems.append(problem)
    lines = []
    for problem in problems:
        a = groups.get((problem, mode_a))
        b = groups.get((problem, mode_b))
        if a is None or b is None:
            continue
        changes = compare(a, b)
        lines.append('{}: {} -> {}: {}'.format(
            problem, mode_a, mode_b, ', '.join(
                '{} {}'.format(
                    _metrics.LABELS[m],
                    'NA' if changes[m] is None
                    else '{:+.1f}%'.format(changes[m]))
                for m in _metrics.METRICS)))
    if not lines:
        raise _error.ConfigurationError(
            'no problem has results for both {} and {}'.format(
                mode_a, mode_b))
    return '\n'.join(lines)


def report(directory, ddof=1, compare_modes=None):
    """Render every ``metrics.csv`` below ``directory``
    """
    rows = _records.read_metrics(directory)
    if not rows:
        raise _error.ConfigurationError(
            'no metrics files below {}'.format(directory))
    _LOG.info('report {} rows from {}'.format(len(rows), directory))
    if compare_modes:
        return render_comparison(rows, *compare_modes, ddof=ddof)
    return render(rows, ddof=ddof)
