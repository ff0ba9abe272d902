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

import os as _os

import numpy as _numpy
import pytest as _pytest

import dualpinn.bench.metrics as _metrics
import dualpinn.bench.records as _records
import dualpinn.bench.report as _report
import dualpinn.bench.sweep as _sweep
import dualpinn.config as _config
import dualpinn.diffnet as _diffnet
import dualpinn.error as _error
import dualpinn.problem as _problem


TINY = '\n'.join([
    'BEGIN:EXPERIMENT',
    'SEED:40',
    'BEGIN:PROBLEM',
    'NAME:POISSON',
    'END:PROBLEM',
    'BEGIN:ARCHITECTURE',
    'ROLE:DOMAIN',
    'LAYERS:5',
    'END:ARCHITECTURE',
    'BEGIN:ARCHITECTURE',
    'ROLE:BOUNDARY',
    'LAYERS:3',
    'END:ARCHITECTURE',
    'BEGIN:SAMPLING',
    'BOUNDARY-POINTS:5',
    'END:SAMPLING',
    'BEGIN:PHASE',
    'NAME:PHASE1',
    'EPOCHS:4',
    'INTERIOR-POINTS:30',
    'END:PHASE',
    'BEGIN:PHASE',
    'NAME:PHASE2',
    'EPOCHS:3',
    'INTERIOR-POINTS:30',
    'SAMPLER:RING-MIX',
    'END:PHASE',
    'BEGIN:EVALUATION',
    'GRID:11,11',
    'BOUNDARY-GRID:9',
    'SLICE-POINTS:7',
    'VALIDATE-EVERY:0',
    'END:EVALUATION',
    'END:EXPERIMENT',
    '',
    ])


def _row(seed, rel_l2, mode='dual-two-phase', status=_records.OK):
    return {'run_id': 'r{}'.format(seed), 'problem': 'LAPLACE', 'mode': mode,
            'seed': seed, 'status': status, 'rel_l2': rel_l2,
            'mae': None if rel_l2 is None else rel_l2 / 10}


def test_metric_identities():
    exact = _numpy.array([1.0, 2.0, -2.0])
    record = _metrics.compute_metrics(exact + [0.3, 0.0, -0.4], exact)
    assert abs(record.mae - 0.7 / 3) < 1e-12
    assert abs(record.rmse - _numpy.sqrt(0.25 / 3)) < 1e-12
    assert abs(record.rel_l2 - 0.5 / 3) < 1e-12
    assert abs(record.accuracy_pct - 100 * (1 - 0.5 / 3)) < 1e-12
    assert record.rmse >= record.mae


def test_accuracy_goes_negative():
    record = _metrics.compute_metrics([4.0], [1.0])
    assert record.rel_l2 == 3.0
    assert record.accuracy_pct == -200.0


def test_metrics_need_a_nonzero_exact_solution():
    with _pytest.raises(_error.ContractViolation):
        _metrics.compute_metrics([0.1, 0.2], [0.0, 0.0])
    with _pytest.raises(_error.ContractViolation):
        _metrics.compute_metrics([0.1], [0.1, 0.2])


def test_population_std_of_five_seeds():
    values = [0.0129, 0.0114, 0.0111, 0.0066, 0.0116]
    mean, std = _sweep.aggregate(values, ddof=0)
    assert (round(mean, 5), round(std, 5)) == (0.01072, 0.00215)
    _, sample = _sweep.aggregate(values)
    assert round(sample, 5) == 0.0024
    assert _sweep.aggregate([0.5]) == (0.5, 0.0)
    with _pytest.raises(_error.ContractViolation):
        _sweep.aggregate([])


def test_failed_rows_stay_out_of_the_aggregates():
    summary = _sweep.SweepSummary([
        _row(40, 0.1), _row(42, 0.3),
        _row(44, None, status='failed: non-finite physics')])
    assert summary.n == 2
    assert len(summary.failed) == 1
    assert abs(summary.mean('rel_l2') - 0.2) < 1e-15
    assert summary.aggregate('rmse') == (None, None)
    mean, std = summary.aggregate_rows()
    assert mean['run_id'] == 'mean' and std['status'] == 'n=2'


def test_slice_rows_add_up():
    problem = _problem.get('LAPLACE')
    nets = {
        'domain': _diffnet.init_xavier([2, 4, 1], seed=1),
        'boundary': _diffnet.init_xavier([2, 3, 1], seed=2),
        }
    rows = _metrics.slice_table(nets, problem, axis='y', value=0.8, points=5)
    assert [r['coordinate'] for r in rows] == [0.0, 0.25, 0.5, 0.75, 1.0]
    for row in rows:
        assert abs(row['u_hat'] - row['u_domain'] - row['u_boundary']) < 1e-12
        assert row['abs_error'] == abs(row['u_hat'] - row['u_exact'])
    assert abs(rows[-1]['u_exact'] + 0.2095) < 1e-12
    with _pytest.raises(_error.ConfigurationError):
        _metrics.slice_table(nets, problem, axis='t')
    with _pytest.raises(_error.ConfigurationError):
        _metrics.slice_table(nets, problem, value=1.5)


def test_one_net_slice_has_a_zero_boundary_column():
    problem = _problem.get('FOKKER-PLANCK')
    nets = {'domain': _diffnet.init_xavier([1, 4, 1], seed=1)}
    rows = _metrics.profile(nets, problem, points=3)
    assert [r['coordinate'] for r in rows] == [-2.5, 0.0, 2.5]
    assert all(r['u_boundary'] == 0.0 for r in rows)


def test_metrics_rows_survive_csv(tmp_path):
    record = _metrics.compute_metrics([1.1, 2.0], [1.0, 2.0],
                                      boundary_error=[0.0, 0.1])
    record.seed = 44
    record.epochs_run = 12
    record.wall_clock_s = 3.5
    row = _records.metrics_row(record, 'abc', 'LAPLACE', 'dual-two-phase')
    assert row['wall_clock_s'] is None
    path = str(tmp_path / 'run' / _records.METRICS_FILE)
    _records.save_rows(path, _records.METRICS_COLUMNS, [row])
    rows = _records.read_metrics(str(tmp_path))
    assert len(rows) == 1
    parsed = rows[0]
    assert parsed['seed'] == 44 and parsed['epochs_run'] == 12
    assert parsed['rel_l2'] == record.rel_l2
    assert parsed['pde_residual_l2'] is None
    timed = _records.metrics_row(record, 'abc', 'LAPLACE', 'dual-two-phase',
                                 timing=True)
    assert timed['wall_clock_s'] == 3.5


def test_missing_results_directory(tmp_path):
    with _pytest.raises(_error.ConfigurationError):
        _records.read_metrics(str(tmp_path / 'absent'))


def test_report_renders_mean_and_std():
    rows = [_row(40, 0.1), _row(42, 0.3)]
    text = _report.render(rows)
    assert text.startswith('LAPLACE (dual-two-phase)')
    assert '| **Mean ± Std** (n=2) |' in text
    assert '0.2 ± 0.1414' in text
    assert '0.2 ± 0.1 ' in _report.render(rows, ddof=0)


def test_report_marks_failed_seeds():
    rows = [_row(40, 0.1), _row(42, None, status='failed: non-finite role')]
    text = _report.render(rows)
    assert '| 42 | failed: non-finite role |' in text
    assert '(n=1)' in text


def test_comparison_of_two_modes():
    rows = [_row(40, 0.5, mode='one-net-one-phase'),
            _row(40, 0.05, mode='dual-two-phase')]
    text = _report.render_comparison(
        rows, 'one-net-one-phase', 'dual-two-phase')
    assert text.startswith('LAPLACE: one-net-one-phase -> dual-two-phase:')
    assert 'Rel. L2 -90.0%' in text
    assert 'RMSE NA' in text
    with _pytest.raises(_error.ConfigurationError):
        _report.render_comparison(rows, 'dual-two-phase', 'missing')


def test_modes():
    experiment = _config.loads_config(TINY)
    assert _sweep.mode(experiment) == 'dual-two-phase'
    assert _sweep.mode(experiment, variant='full') == 'dual-two-phase'
    assert _sweep.mode(_config.ablation(experiment, 'one-net'),
                       variant='one-net') == 'one-net-two-phase+one-net'


def test_sweep_writes_every_run(tmp_path):
    experiment = _config.loads_config(TINY)
    out = str(tmp_path)
    summary = _sweep.sweep(experiment, [40, 41], out=out)
    assert summary.n == 2
    assert [r['seed'] for r in summary.rows] == [40, 41]
    assert all(r['epochs_run'] == 7 for r in summary.rows)
    for row in summary.rows:
        run_dir = _os.path.join(out, row['run_id'])
        for name in ['metrics.csv', 'trace.csv', 'checkpoint', 'slice_y0.8.csv']:
            assert _os.path.isfile(_os.path.join(run_dir, name))
        trace = _records.load_rows(_os.path.join(run_dir, 'trace.csv'))
        assert len(trace) == 7
        assert all(r['wall_clock_s'] == '' for r in trace)
    assert _os.path.isfile(_os.path.join(out, _sweep.SUMMARY_FILE))
    text = _report.report(out)
    assert 'POISSON (dual-two-phase)' in text
    assert '(n=2)' in text


def test_sweeps_repeat_exactly(tmp_path):
    experiment = _config.loads_config(TINY)
    a = _sweep.sweep(experiment, [43])
    b = _sweep.sweep(experiment, [43])
    assert a.rows == b.rows


def test_worker_processes_change_nothing(tmp_path, monkeypatch):
    monkeypatch.delenv(_sweep.THREADS_ENV, raising=False)
    experiment = _config.loads_config(TINY)
    serial = tmp_path / 'serial'
    pooled = tmp_path / 'pooled'
    _sweep.sweep(experiment, [40, 41], out=str(serial))
    _sweep.sweep(experiment, [40, 41], jobs=2, out=str(pooled))
    for name in [_sweep.SUMMARY_FILE] + [
            _os.path.join(run_id, 'metrics.csv')
            for run_id in _os.listdir(str(serial))
            if _os.path.isdir(str(serial / run_id))]:
        assert (serial / name).read_bytes() == (pooled / name).read_bytes()


def test_sweep_needs_seeds():
    with _pytest.raises(_error.ConfigurationError):
        _sweep.sweep(_config.loads_config(TINY), [])


def test_ablation_grid(tmp_path):
    experiment = _config.loads_config(TINY)
    summaries = _sweep.ablate(experiment, [40], out=str(tmp_path),
                              variants=['full', 'one-net'])
    assert [variant for variant, _ in summaries] == ['full', 'one-net']
    rows = _records.load_rows(str(tmp_path / _sweep.ABLATION_FILE))
    assert [r['mode'] for r in rows] == [
        'dual-two-phase', 'one-net-two-phase+one-net']
    assert all(r['n'] == '1' for r in rows)


def test_aborted_runs_give_failed_rows(tmp_path, monkeypatch):
    def abort(experiment, seed=None):
        raise _error.TrainingAborted(part='physics', epoch=2, phase='PHASE1')

    monkeypatch.setattr(_sweep._protocol, 'run', abort)
    row = _sweep.run_experiment(_config.loads_config(TINY), out=str(tmp_path))
    assert row['status'].startswith('failed: ')
    assert row['seed'] == 40
    assert _os.path.isfile(str(tmp_path / row['run_id'] / 'metrics.csv'))


def test_jobs_limit(monkeypatch):
    monkeypatch.delenv(_sweep.THREADS_ENV, raising=False)
    assert _sweep.jobs_limit(4) == 4
    assert _sweep.jobs_limit(0) == 1
    monkeypatch.setenv(_sweep.THREADS_ENV, '2')
    assert _sweep.jobs_limit(4) == 2
    monkeypatch.setenv(_sweep.THREADS_ENV, 'many')
    with _pytest.raises(_error.ConfigurationError):
        _sweep.jobs_limit(4)
