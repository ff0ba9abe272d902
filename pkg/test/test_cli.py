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

import pytest as _pytest

import dualpinn.bench.records as _records
import dualpinn.bench.sweep as _sweep
import dualpinn.cli as _cli
import dualpinn.error as _error


TINY = '\n'.join([
    'BEGIN:EXPERIMENT',
    'SEED:40',
    'NETWORKS:1',
    'PROTOCOL:ONE-PHASE',
    'BEGIN:PROBLEM',
    'NAME:LAPLACE',
    'END:PROBLEM',
    'BEGIN:ARCHITECTURE',
    'ROLE:DOMAIN',
    'LAYERS:5',
    'END:ARCHITECTURE',
    'BEGIN:SAMPLING',
    'BOUNDARY-POINTS:4',
    'END:SAMPLING',
    'BEGIN:PHASE',
    'NAME:PHASE1',
    'EPOCHS:10',
    'INTERIOR-POINTS:20',
    'END:PHASE',
    'BEGIN:EVALUATION',
    'GRID:9,9',
    'BOUNDARY-GRID:5',
    'SLICE-POINTS:5',
    'VALIDATE-EVERY:0',
    'END:EVALUATION',
    'END:EXPERIMENT',
    '',
    ])


@_pytest.fixture
def config(tmp_path):
    path = tmp_path / 'tiny.cfg'
    path.write_text(TINY)
    return str(path)


@_pytest.mark.parametrize('text, seeds', [
    ('40', [40]),
    ('40, 42,44', [40, 42, 44]),
    ('40-44', [40, 41, 42, 43, 44]),
    ('40-46:3,50', [40, 43, 46, 50]),
    (',', []),
    ])
def test_seed_lists(text, seeds):
    assert _cli.seed_list(text) == seeds


def test_bad_seed_list_is_a_usage_error(config):
    with _pytest.raises(SystemExit) as info:
        _cli.main(['sweep', '--config', config, '--seeds', 'forty'])
    assert info.value.code == _cli.EXIT_USAGE


def test_no_command():
    assert _cli.main([]) == _cli.EXIT_USAGE


def test_presets(capsys):
    assert _cli.main(['presets']) == _cli.EXIT_OK
    names = capsys.readouterr().out.split()
    assert 'laplace-dual' in names and 'fp-sequential' in names


def test_preset_names_and_overrides():
    args = _cli.parser().parse_args(
        ['run', '--config', 'laplace-dual', '--seed', '46',
         '--epoch-scale', '0.5'])
    experiment = _cli.load(args)
    assert experiment.value('SEED') == 46
    assert experiment.value('EPOCH-SCALE') == 0.5


def test_missing_config(tmp_path, capsys):
    code = _cli.main(['run', '--config', str(tmp_path / 'nothing.cfg'),
                      '--out', str(tmp_path)])
    assert code == _cli.EXIT_USAGE
    assert capsys.readouterr().err.startswith('dualpinn: ')


def test_empty_seed_list(config, tmp_path):
    code = _cli.main(['sweep', '--config', config, '--seeds', ',',
                      '--out', str(tmp_path)])
    assert code == _cli.EXIT_USAGE


def test_run_writes_results(config, tmp_path, capsys):
    out = str(tmp_path / 'results')
    code = _cli.main(['run', '--config', config, '--out', out,
                      '--epoch-scale', '0.5'])
    assert code == _cli.EXIT_OK
    line = capsys.readouterr().out
    assert 'LAPLACE one-net-one-phase seed 40' in line
    rows = _records.read_metrics(out)
    assert len(rows) == 1
    assert rows[0]['epochs_run'] == 5
    assert rows[0]['wall_clock_s'] is None
    assert _os.path.isfile(_os.path.join(
        out, rows[0]['run_id'], 'slice_y0.8.csv'))
    assert _cli.main(['report', out]) == _cli.EXIT_OK
    assert 'LAPLACE (one-net-one-phase)' in capsys.readouterr().out


def test_timing_records_the_wall_clock(config, tmp_path):
    out = str(tmp_path)
    assert _cli.main(['run', '--config', config, '--out', out,
                      '--epoch-scale', '0.2', '--timing']) == _cli.EXIT_OK
    assert _records.read_metrics(out)[0]['wall_clock_s'] > 0


def test_sweep_prints_the_summary(config, tmp_path, capsys):
    code = _cli.main(['sweep', '--config', config, '--seeds', '40,41',
                      '--out', str(tmp_path), '--epoch-scale', '0.2'])
    assert code == _cli.EXIT_OK
    out = capsys.readouterr().out
    assert out.startswith('one-net-one-phase (n=2, failed 0): mae ')


def test_aborted_training_exits_with_one(config, tmp_path, monkeypatch):
    def abort(experiment, seed=None):
        raise _error.TrainingAborted(part='role', epoch=0, phase='PHASE1')

    monkeypatch.setattr(_sweep._protocol, 'run', abort)
    code = _cli.main(['run', '--config', config, '--out', str(tmp_path)])
    assert code == _cli.EXIT_TRAINING
    code = _cli.main(['sweep', '--config', config, '--seeds', '40,41',
                      '--out', str(tmp_path)])
    assert code == _cli.EXIT_TRAINING


def test_report_without_results(tmp_path):
    assert _cli.main(['report', str(tmp_path)]) == _cli.EXIT_USAGE
    assert _cli.main(['report', str(tmp_path / 'absent')]) == \
        _cli.EXIT_USAGE


def test_compare_needs_both_modes(config, tmp_path):
    out = str(tmp_path)
    assert _cli.main(['run', '--config', config, '--out', out,
                      '--epoch-scale', '0.2']) == _cli.EXIT_OK
    assert _cli.main(['report', out, '--compare', 'one-net-one-phase',
                      'dual-two-phase']) == _cli.EXIT_USAGE
