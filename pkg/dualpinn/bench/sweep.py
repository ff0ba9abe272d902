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

"""Runs over seeds and ablation variants

Every seed trains in isolation from the experiment text, so sweeps give
the same rows whether they run serially or in a process pool.

>>> mean, std = aggregate([0.0129, 0.0114, 0.0111, 0.0066, 0.0116], ddof=0)
>>> round(mean, 5), round(std, 5)
(0.01072, 0.00215)
"""

import logging as _logging
import multiprocessing as _multiprocessing
import os as _os

import numpy as _numpy

from .. import config as _config
from .. import error as _error
from ..trainer import protocol as _protocol
from . import metrics as _metrics
from . import records as _records


_LOG = _logging.getLogger(__name__)

THREADS_ENV = 'DUALPINN_THREADS'

SUMMARY_FILE = 'sweep.csv'
ABLATION_FILE = 'ablation.csv'


def aggregate(values, ddof=1):
    """``(mean, std)``; the std of a single value is 0

    ``ddof=1`` gives the sample standard deviation, ``ddof=0`` the
    population one.
    """
    values = _numpy.asarray(values, dtype=_numpy.float64)
    if not values.size:
        raise _error.ContractViolation('cannot aggregate zero values')
    if values.size == 1:
        return float(values[0]), 0.0
    return float(values.mean()), float(values.std(ddof=ddof))


class SweepSummary (object):
    """Per-seed metrics rows with mean and standard deviation per metric

    Failed rows stay in ``rows`` but never enter the aggregates.
    """
    def __init__(self, rows, ddof=1):
        self.rows = list(rows)
        self.ddof = ddof

    def __repr__(self):
        return '<{}.{} n:{} failed:{}>'.format(
            self.__module__, type(self).__name__, self.n, len(self.failed))

    @property
    def ok(self):
        return [r for r in self.rows if r['status'] == _records.OK]

    @property
    def failed(self):
        return [r for r in self.rows if r['status'] != _records.OK]

    @property
    def n(self):
        return len(self.ok)

    def values(self, metric):
        return [r[metric] for r in self.ok if r.get(metric) is not None]

    def aggregate(self, metric):
        """``(mean, std)`` of ``metric``, or ``(None, None)`` without values
        """
        values = self.values(metric)
        if not values:
            return None, None
        return aggregate(values, ddof=self.ddof)

    def mean(self, metric):
        return self.aggregate(metric)[0]

    def std(self, metric):
        return self.aggregate(metric)[1]

    def aggregate_rows(self):
        """Rows labelled ``mean`` and ``std`` in the metrics CSV layout
        """
        first = self.rows[0] if self.rows else {}
        rows = []
        for index, label in enumerate(['mean', 'std']):
            row = {
                'run_id': label,
                'problem': first.get('problem'),
                'mode': first.get('mode'),
                'seed': None,
                'status': 'n={}'.format(self.n),
                }
            for metric in _metrics.METRICS:
                row[metric] = self.aggregate(metric)[index]
            rows.append(row)
        return rows


def mode(experiment, variant=None):
    """Row label of an experiment, e.g. ``dual-two-phase``
    """
    nets = 'one-net' if experiment.value('NETWORKS') == 1 else 'dual'
    label = '{}-{}'.format(nets, experiment.value('PROTOCOL').lower())
    if variant and variant != 'full':
        label = '{}+{}'.format(label, variant)
    return label


def slices(nets, problem, experiment):
    """``(label, rows)`` pairs of the slice tables written with each run
    """
    evaluation = experiment.section('EVALUATION')
    points = evaluation.value('SLICE-POINTS')
    value = evaluation.value('SLICE')
    domain = problem.domain
    if domain.dim == 1:
        return [('profile', _metrics.profile(nets, problem, points=points))]
    axis = _metrics.AXES[domain.name][1]
    if value is None:
        value = 0.5 if axis == 't' else 0.8
    return [('{}{:g}'.format(axis, value), _metrics.slice_table(
        nets, problem, axis=axis, value=value, points=points))]


def run_experiment(experiment, seed=None, out=None, variant=None,
                   timing=False):
    """Train one seed and write its artifacts under ``out``

    Returns the metrics row.  A training abort gives a failed row; the
    partial trace is still written.
    """
    if seed is not None:
        experiment = _config.apply_overrides(experiment, seed=seed)
    seed = experiment.value('SEED')
    run_id = _config.run_id(experiment)
    problem_name = experiment.section('PROBLEM').value('NAME')
    label = mode(experiment, variant=variant)
    try:
        nets, trace, record, state = _protocol.run(experiment)
    except _error.TrainingAborted as e:
        _LOG.warning('run {} (seed {}) failed: {}'.format(run_id, seed, e))
        status = 'failed: {}'.format(e)
        if out is not None:
            _records.write_run(
                out, run_id, problem_name, label, e.nets, e.trace, None,
                timing=timing, status=status, seed=seed)
        return _records.metrics_row(
            None, run_id, problem_name, label, status=status, seed=seed)
    if out is not None:
        problem = _config.make_problem(experiment)
        _records.write_run(
            out, run_id, problem_name, label, nets, trace, record,
            alm_states=state.alm, timing=timing,
            slices=slices(nets, problem, experiment))
    return _records.metrics_row(
        record, run_id, problem_name, label, timing=timing)


def _run_task(task):
    text, seed, out, variant, timing = task
    experiment = _config.loads_config(text)
    return run_experiment(experiment, seed=seed, out=out, variant=variant,
                          timing=timing)


def jobs_limit(jobs):
    """Cap ``jobs`` by ``DUALPINN_THREADS``
    """
    limit = _os.environ.get(THREADS_ENV)
    if limit:
        try:
            limit = int(limit)
        except ValueError:
            raise _error.ConfigurationError(
                '{} must be an integer, not {!r}'.format(THREADS_ENV, limit))
        if limit >= 1:
            jobs = min(jobs, limit)
    return max(1, int(jobs))


def _map(tasks, jobs):
    jobs = min(jobs_limit(jobs), len(tasks))
    if jobs <= 1:
        return [_run_task(task) for task in tasks]
    _LOG.info('run {} tasks on {} processes'.format(len(tasks), jobs))
    pool = _multiprocessing.Pool(processes=jobs)
    try:
        return pool.map(_run_task, tasks)
    finally:
        pool.close()
        pool.join()


def sweep(experiment, seeds, jobs=1, out=None, variant=None, timing=False,
          ddof=1):
    """SweepSummary of ``experiment`` over ``seeds``
    """
    seeds = list(seeds)
    if not seeds:
        raise _error.ConfigurationError('a sweep needs at least one seed')
    text = _config.dump_config(experiment)
    rows = _map([(text, seed, out, variant, timing) for seed in seeds], jobs)
    summary = SweepSummary(rows, ddof=ddof)
    for row in summary.failed:
        _LOG.warning('seed {} excluded from the aggregates ({})'.format(
            row['seed'], row['status']))
    if out is not None:
        name = SUMMARY_FILE
        if variant:
            name = 'sweep-{}.csv'.format(variant)
        _records.save_rows(
            _os.path.join(out, name), _records.METRICS_COLUMNS,
            summary.rows + summary.aggregate_rows())
    return summary


ABLATION_COLUMNS = ['variant', 'mode', 'n', 'failed'] + [
    '{}_{}'.format(metric, stat)
    for metric in _metrics.METRICS for stat in ('mean', 'std')]


def ablation_rows(summaries):
    rows = []
    for variant, summary in summaries:
        first = summary.rows[0] if summary.rows else {}
        row = {
            'variant': variant,
            'mode': first.get('mode'),
            'n': summary.n,
            'failed': len(summary.failed),
            }
        for metric in _metrics.METRICS:
            mean, std = summary.aggregate(metric)
            row['{}_mean'.format(metric)] = mean
            row['{}_std'.format(metric)] = std
        rows.append(row)
    return rows


def ablate(experiment, seeds, jobs=1, out=None, variants=None, timing=False,
           ddof=1):
    """``[(variant, SweepSummary)]`` over the ablation grid, same seeds
    """
    if variants is None:
        variants = _config.ABLATIONS
    summaries = []
    for variant in variants:
        _LOG.info('ablation variant {}'.format(variant))
        summaries.append((variant, sweep(
            _config.ablation(experiment, variant), seeds, jobs=jobs, out=out,
            variant=variant, timing=timing, ddof=ddof)))
    if out is not None:
        _records.save_rows(
            _os.path.join(out, ABLATION_FILE), ABLATION_COLUMNS,
            ablation_rows(summaries))
    return summaries
