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

"""CSV files of a run: metrics, trace and slice tables

Floats are written with ``repr`` so reading a file back gives the very
same numbers; missing values are empty cells.

>>> format_value(0.1), format_value(None), format_value(3)
('0.1', '', '3')
"""

import codecs as _codecs
import csv as _csv
import logging as _logging
import os as _os
import os.path as _os_path

from .. import error as _error
from ..trainer import checkpoint as _checkpoint
from . import metrics as _metrics


_LOG = _logging.getLogger(__name__)

# bump when the column list changes
METRICS_FORMAT = 1

METRICS_COLUMNS = [
    'run_id',
    'problem',
    'mode',
    'seed',
    'mae',
    'rmse',
    'rel_l2',
    'accuracy_pct',
    'boundary_l2',
    'pde_residual_l2',
    'epochs_run',
    'wall_clock_s',
    'status',
    ]

METRICS_FILE = 'metrics.csv'
TRACE_FILE = 'trace.csv'
CHECKPOINT_FILE = 'checkpoint'

OK = 'ok'


def format_value(value):
    if value is None:
        return ''
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if isinstance(value, float):
        return repr(value)
    return str(value)


def write_rows(stream, columns, rows):
    writer = _csv.DictWriter(stream, fieldnames=columns, lineterminator='\n')
    writer.writeheader()
    for row in rows:
        writer.writerow(dict(
            (column, format_value(row.get(column))) for column in columns))


def save_rows(path, columns, rows):
    directory = _os_path.dirname(path)
    if directory and not _os_path.isdir(directory):
        _os.makedirs(directory)
    with _codecs.open(path, 'w', encoding='utf-8') as f:
        write_rows(f, columns, rows)


def read_rows(stream):
    return list(_csv.DictReader(stream))


def load_rows(path):
    with _codecs.open(path, 'r', encoding='utf-8') as f:
        return read_rows(f)


def metrics_row(record, run_id, problem, mode, timing=False,
                status=OK, seed=None):
    """CSV row of a MetricsRecord (or of a failed run when ``record`` is None)

    The wall clock is only written with ``timing`` so repeated runs give
    identical files.
    """
    row = {
        'run_id': run_id,
        'problem': problem,
        'mode': mode,
        'seed': seed,
        'status': status,
        }
    if record is not None:
        row.update(record.as_dict())
        row['seed'] = record.seed
        row['epochs_run'] = record.epochs_run
        if timing:
            row['wall_clock_s'] = record.wall_clock_s
    return row


def _float(text):
    return float(text) if text != '' else None


def parse_metrics_row(row):
    """Typed copy of a metrics row read from CSV

    >>> row = parse_metrics_row({'run_id': 'abc', 'problem': 'LAPLACE',
    ...     'mode': 'dual-two-phase', 'seed': '40', 'mae': '0.5',
    ...     'rel_l2': '', 'status': 'ok'})
    >>> row['seed'], row['mae'], row['rel_l2']
    (40, 0.5, None)
    """
    missing = [c for c in ('run_id', 'problem', 'mode', 'status')
               if c not in row]
    if missing:
        raise _error.ConfigurationError(
            'metrics row without {}'.format(', '.join(missing)))
    parsed = {}
    for column in METRICS_COLUMNS:
        text = row.get(column, '')
        if column in ('run_id', 'problem', 'mode', 'status'):
            parsed[column] = text
        elif column in ('seed', 'epochs_run'):
            parsed[column] = int(text) if text != '' else None
        else:
            parsed[column] = _float(text)
    return parsed


def metrics_files(directory):
    """Every ``metrics.csv`` below ``directory``, in a stable order
    """
    found = []
    for root, dirs, files in _os.walk(directory):
        dirs.sort()
        if METRICS_FILE in files:
            found.append(_os_path.join(root, METRICS_FILE))
    return sorted(found)


def read_metrics(directory):
    if not _os_path.isdir(directory):
        raise _error.ConfigurationError(
            'no results directory {}'.format(directory))
    rows = []
    for path in metrics_files(directory):
        try:
            rows.extend(parse_metrics_row(r) for r in load_rows(path))
        except ValueError as e:
            raise _error.ConfigurationError(
                'bad metrics file: {}'.format(e), path=path)
    return rows


def write_run(directory, run_id, problem, mode, nets, trace, record,
              alm_states=None, timing=False, slices=(), status=OK, seed=None):
    """Write the artifacts of one run into ``directory/run_id``

    ``slices`` holds ``(label, rows)`` pairs from ``metrics.slice_table``
    or ``metrics.profile``.  Returns the run directory.
    """
    run_dir = _os_path.join(directory, run_id)
    if not _os_path.isdir(run_dir):
        _os.makedirs(run_dir)
    save_rows(_os_path.join(run_dir, METRICS_FILE), METRICS_COLUMNS, [
        metrics_row(record, run_id, problem, mode, timing=timing,
                    status=status, seed=seed)])
    if trace is not None:
        save_trace(_os_path.join(run_dir, TRACE_FILE), trace, timing=timing)
    if nets is not None:
        _checkpoint.save_checkpoint(
            _os_path.join(run_dir, CHECKPOINT_FILE), nets, alm_states,
            epoch=len(trace) if trace is not None else 0)
    for label, rows in slices:
        save_rows(_os_path.join(run_dir, 'slice_{}.csv'.format(label)),
                  _metrics.SLICE_COLUMNS, rows)
    _LOG.info('wrote run {} to {}'.format(run_id, run_dir))
    return run_dir


def save_trace(path, trace, timing=False):
    columns = list(trace.columns)
    records = list(trace)
    if not timing:
        records = [dict(r, wall_clock_s=None) for r in records]
    save_rows(path, columns, records)
