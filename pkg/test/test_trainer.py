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

import math as _math

import numpy as _numpy
import numpy.testing as _numpy_testing
import pytest as _pytest

import dualpinn.bench.metrics as _metrics
import dualpinn.config as _config
import dualpinn.diffnet as _diffnet
import dualpinn.error as _error
import dualpinn.objective as _objective
import dualpinn.problem.fokker_planck as _fokker_planck
import dualpinn.trainer as _trainer
import dualpinn.trainer.checkpoint as _checkpoint
import dualpinn.trainer.phase as _phase
import dualpinn.trainer.protocol as _protocol


SMALL = '\n'.join([
    'BEGIN:EXPERIMENT',
    'SEED:40',
    'BEGIN:PROBLEM',
    'NAME:LAPLACE',
    'END:PROBLEM',
    'BEGIN:ARCHITECTURE',
    'ROLE:DOMAIN',
    'LAYERS:6,6',
    'END:ARCHITECTURE',
    'BEGIN:ARCHITECTURE',
    'ROLE:BOUNDARY',
    'LAYERS:4',
    'END:ARCHITECTURE',
    'BEGIN:SAMPLING',
    'BOUNDARY-POINTS:4',
    'END:SAMPLING',
    'BEGIN:ALM',
    'UPDATE-EVERY:5',
    'RAMP-EVERY:10',
    'END:ALM',
    'BEGIN:PHASE',
    'NAME:PHASE1',
    'EPOCHS:12',
    'INTERIOR-POINTS:40',
    'END:PHASE',
    'BEGIN:PHASE',
    'NAME:PHASE2',
    'EPOCHS:8',
    'INTERIOR-POINTS:40',
    'SAMPLER:RING-MIX',
    'END:PHASE',
    'BEGIN:EVALUATION',
    'GRID:9,9',
    'BOUNDARY-GRID:11',
    'VALIDATE-EVERY:5',
    'VALIDATION-POINTS:5',
    'END:EVALUATION',
    'END:EXPERIMENT',
    '',
    ])

SEQUENTIAL = '\n'.join([
    'BEGIN:EXPERIMENT',
    'SEED:42',
    'PROTOCOL:SEQUENTIAL-FP',
    'BEGIN:PROBLEM',
    'NAME:FOKKER-PLANCK',
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
    'PSEUDO-MEASUREMENTS:20',
    'END:SAMPLING',
    'BEGIN:PHASE',
    'NAME:FPDATA',
    'EPOCHS:3',
    'END:PHASE',
    'BEGIN:PHASE',
    'NAME:FPRESIDUAL',
    'EPOCHS:3',
    'INTERIOR-POINTS:30',
    'END:PHASE',
    'BEGIN:PHASE',
    'NAME:FPJOINT',
    'EPOCHS:3',
    'INTERIOR-POINTS:30',
    'SAMPLER:RING-MIX',
    'END:PHASE',
    'BEGIN:EVALUATION',
    'GRID:50',
    'END:EVALUATION',
    'END:EXPERIMENT',
    '',
    ])

JOINT_FP = '\n'.join([
    'BEGIN:EXPERIMENT',
    'SEED:42',
    'BEGIN:PROBLEM',
    'NAME:FOKKER-PLANCK',
    'END:PROBLEM',
    'BEGIN:ARCHITECTURE',
    'ROLE:DOMAIN',
    'LAYERS:8',
    'END:ARCHITECTURE',
    'BEGIN:ARCHITECTURE',
    'ROLE:BOUNDARY',
    'LAYERS:4',
    'END:ARCHITECTURE',
    'BEGIN:OPTIMIZER',
    'LEARNING-RATE:0.01',
    'END:OPTIMIZER',
    'BEGIN:PHASE',
    'NAME:PHASE1',
    'EPOCHS:150',
    'INTERIOR-POINTS:40',
    'END:PHASE',
    'BEGIN:PHASE',
    'NAME:PHASE2',
    'EPOCHS:150',
    'INTERIOR-POINTS:40',
    'SAMPLER:RING-MIX',
    'END:PHASE',
    'BEGIN:EVALUATION',
    'GRID:50',
    'VALIDATE-EVERY:0',
    'END:EVALUATION',
    'END:EXPERIMENT',
    '',
    ])


def _setup(text=SMALL):
    experiment = _config.loads_config(text)
    problem = _config.make_problem(experiment)
    nets = _protocol.build_nets(experiment, problem)
    state = _protocol.build_state(experiment, problem)
    return experiment, problem, nets, state


def _same_nets(a, b):
    return sorted(a) == sorted(b) and all(a[r].equals(b[r]) for r in a)


def test_adam_first_step_moves_by_the_learning_rate():
    layer = _diffnet.Layer(weight=[[1.0]], bias=[0.0],
                           activation=_diffnet.Linear())
    params = _diffnet.MlpParams([layer])
    for g in [5.0, -0.01]:
        grads = _diffnet.ParamGrads([[[g]], [g]])
        new, state = _trainer.adam_step(
            params, grads, _trainer.AdamState.zeros(params),
            _trainer.AdamConfig(lr=1e-3))
        step = float(new.layers[0].weight[0, 0]) - 1.0
        assert abs(step + 1e-3 * _math.copysign(1.0, g)) < 1e-8
        assert state.step == 1


def test_adam_rejects_non_finite_gradients():
    params = _diffnet.init_xavier([1, 2, 1], seed=0)
    grads = _diffnet.ParamGrads.zeros_like(params)
    grads.arrays[0][0, 0] = float('nan')
    with _pytest.raises(_error.TrainingAborted):
        _trainer.adam_step(params, grads, _trainer.AdamState.zeros(params),
                           _trainer.AdamConfig())


def test_zero_epochs_leave_everything_alone():
    _, problem, nets, state = _setup()
    plan = _trainer.PhasePlan('PHASE1', 0)
    new, alm, trace = _trainer.train_phase(nets, problem, plan, state)
    assert _same_nets(new, nets)
    assert len(trace) == 0
    assert alm['boundary'].lambdas.tolist() == [0.0] * 16


def test_multipliers_update_every_k_epochs(monkeypatch):
    _, problem, nets, state = _setup()
    state.alm['boundary'] = state.alm['boundary'].replace(k=50, h=1000)
    calls = []
    original = _objective.alm_update

    def counting(alm, c):
        calls.append(1)
        return original(alm, c)

    monkeypatch.setattr(_phase._objective, 'alm_update', counting)
    plan = _trainer.PhasePlan('PHASE1', 200, n_interior=10)
    _, alm, trace = _trainer.train_phase(nets, problem, plan, state)
    assert len(calls) == 4
    assert len(trace) == 200
    assert alm['boundary'].rho == 1.0


def test_penalty_ramps_every_h_epochs():
    _, problem, nets, state = _setup()
    plan = _trainer.PhasePlan('PHASE1', 20, n_interior=10)
    _, alm, trace = _trainer.train_phase(nets, problem, plan, state)
    assert alm['boundary'].rho == 4.0
    assert trace.column('rho')[9] == 2.0
    assert trace.column('rho')[19] == 4.0


def test_fixed_penalty_freezes_multipliers():
    _, problem, nets, state = _setup()
    state.fixed_penalty = True
    plan = _trainer.PhasePlan('PHASE1', 20, n_interior=10)
    _, alm, _ = _trainer.train_phase(nets, problem, plan, state)
    assert alm['boundary'].rho == 1.0
    assert alm['boundary'].lambda_norm() == 0.0


def test_off_ramp_policy_keeps_rho():
    _, problem, nets, state = _setup()
    plan = _trainer.PhasePlan('PHASE2', 20, n_interior=10,
                              ramp_policy='off')
    _, alm, _ = _trainer.train_phase(nets, problem, plan, state)
    assert alm['boundary'].rho == 1.0
    assert alm['boundary'].lambda_norm() > 0.0


def test_frozen_network_is_untouched():
    _, problem, nets, state = _setup()
    boundary = nets['boundary'].copy()
    plan = _trainer.PhasePlan('PHASE1', 5, trainable=['domain'],
                              n_interior=20)
    new, _, _ = _trainer.train_phase(nets, problem, plan, state)
    assert new['boundary'] is nets['boundary']
    assert new['boundary'].equals(boundary)
    assert not new['domain'].equals(nets['domain'])


def test_trace_records_schedules():
    _, problem, nets, state = _setup()
    plan = _trainer.PhasePlan(
        'PHASE2', 11, sampler='ring_mix', n_interior=20,
        losses={'physics': 1.0, 'alm': 1.0, 'role': 1.0},
        gamma=_objective.GammaSchedule(0.01, 1.0, 10),
        w_bc=_objective.GammaSchedule(1.0, 10.0, 10))
    _, _, trace = _trainer.train_phase(nets, problem, plan, state)
    gammas = trace.column('gamma')
    assert gammas[0] == 1.0 and gammas[10] == 0.01
    assert trace.column('w_bc')[0] == 10.0
    assert trace.column('epoch') == list(range(11))
    assert set(trace.column('phase')) == set(['PHASE2'])
    assert all(r is not None for r in trace.column('role'))
    validations = trace.column('validation_rel_l2')
    assert validations[0] is not None and validations[1] is None
    best = trace.best_so_far()
    assert all(a >= b for a, b in zip(best, best[1:]))


def test_trace_rejects_unknown_columns():
    with _pytest.raises(_error.ContractViolation):
        _trainer.TrainTrace().append(phase='PHASE1', bogus=1.0)


def test_early_stop_restores_the_best_parameters():
    _, problem, nets, state = _setup()
    early = _trainer.EarlyStopConfig(patience=3, min_delta=1e9)
    plan = _trainer.PhasePlan('PHASE1', 50, n_interior=10, early_stop=early)
    new, _, trace = _trainer.train_phase(nets, problem, plan, state)
    assert len(trace) == 4
    assert _same_nets(new, nets)


def test_non_finite_loss_aborts_with_the_last_good_parameters(monkeypatch):
    _, problem, nets, state = _setup()
    original = _objective.physics_loss
    calls = []

    def exploding(*args):
        calls.append(1)
        value, cotangent = original(*args)
        if len(calls) > 3:
            value = float('nan')
        return value, cotangent

    monkeypatch.setattr(_phase._objective, 'physics_loss', exploding)
    plan = _trainer.PhasePlan('PHASE1', 10, n_interior=10)
    with _pytest.raises(_error.TrainingAborted) as info:
        _trainer.train_phase(nets, problem, plan, state)
    error = info.value
    assert error.part == 'physics'
    assert error.epoch == 3
    assert error.phase == 'PHASE1'
    assert len(error.trace) == 3
    assert all(net.is_finite() for net in error.nets.values())
    assert not _same_nets(error.nets, nets)


def test_bad_plans():
    with _pytest.raises(_error.ConfigurationError):
        _trainer.PhasePlan('PHASE3', 10)
    with _pytest.raises(_error.ConfigurationError):
        _trainer.PhasePlan('PHASE1', 10, sampler='sobol')
    with _pytest.raises(_error.ConfigurationError):
        _trainer.PhasePlan('PHASE1', 10, trainable=[])
    with _pytest.raises(_error.ConfigurationError):
        _trainer.PhasePlan('PHASE1', 10, losses={'entropy': 1.0})


def test_plans_follow_the_protocol():
    experiment, problem, _, _ = _setup()
    plans = _protocol.plans(experiment, problem)
    assert [p.name for p in plans] == ['PHASE1', 'PHASE2']
    phase1, phase2 = plans
    assert phase1.sampler == 'uniform' and phase2.sampler == 'ring_mix'
    assert phase1.gamma.T == 0 and phase2.gamma.T == 8
    assert sorted(phase1.losses) == ['alm', 'physics', 'role']
    one_net = _config.ablation(experiment, 'one-net')
    assert 'role' not in _protocol.plans(one_net, problem)[0].losses
    one_phase = _config.apply_overrides(experiment)
    one_phase.set('PROTOCOL', 'ONE-PHASE')
    assert [p.name for p in _protocol.plans(one_phase, problem)] == ['PHASE1']


@_pytest.mark.parametrize('name', [
    'fp-one-net-one-phase', 'fp-one-net-two-phase', 'fp-dual'])
def test_fokker_planck_plans_carry_the_normalization(name):
    experiment = _config.load_config(_config.preset_path(name))
    problem = _config.make_problem(experiment)
    plans = _protocol.plans(experiment, problem)
    assert plans
    for plan in plans:
        assert plan.losses['normalization'] == 1.0


def test_laplace_plans_skip_the_normalization():
    experiment, problem, _, _ = _setup()
    for plan in _protocol.plans(experiment, problem):
        assert 'normalization' not in plan.losses


def _mass(nets, problem):
    grid = _fokker_planck.normalization_grid(problem)
    return _fokker_planck.fp_mass(
        _metrics.combined_values(nets, grid), problem.dx)


def test_joint_fokker_planck_run_moves_the_mass_to_one(monkeypatch):
    experiment = _config.loads_config(JOINT_FP)
    nets, trace, _, state = _trainer.run(experiment)
    assert trace.column('phase') == ['PHASE1'] * 150 + ['PHASE2'] * 150
    assert all(v is not None for v in trace.column('normalization'))
    mass = _mass(nets, state.problem)
    initial = _mass(
        _protocol.build_nets(experiment, state.problem), state.problem)
    assert abs(mass - 1) < abs(initial - 1)

    original = _protocol.plans

    def without_normalization(experiment, problem):
        result = original(experiment, problem)
        for plan in result:
            plan.losses.pop('normalization', None)
        return result

    monkeypatch.setattr(_protocol, 'plans', without_normalization)
    bare, _, _, _ = _trainer.run(experiment)
    assert abs(mass - 1) < abs(_mass(bare, state.problem) - 1)


def test_runs_are_deterministic():
    experiment = _config.loads_config(SMALL)
    nets_a, trace_a, metrics_a, _ = _trainer.run(experiment)
    nets_b, trace_b, metrics_b, _ = _trainer.run(experiment)
    assert _same_nets(nets_a, nets_b)
    assert trace_a.column('total') == trace_b.column('total')
    assert metrics_a.as_dict() == metrics_b.as_dict()
    assert metrics_a.epochs_run == 20
    assert metrics_a.seed == 40
    assert metrics_a.fingerprint == _config.run_id(experiment)


def test_seeds_change_the_run():
    experiment = _config.loads_config(SMALL)
    nets_a = _trainer.run(experiment)[0]
    nets_b = _trainer.run(experiment, seed=41)[0]
    assert not _same_nets(nets_a, nets_b)


def test_empty_phase2_reduces_to_one_phase():
    experiment = _config.loads_config(SMALL)
    experiment.section('PHASE', key='PHASE2').set('EPOCHS', 0)
    one_phase = experiment.copy()
    one_phase.set('PROTOCOL', 'ONE-PHASE')
    nets_a, trace_a, _, _ = _trainer.run(experiment)
    nets_b, trace_b, _, _ = _trainer.run(one_phase)
    assert _same_nets(nets_a, nets_b)
    assert trace_a.column('total') == trace_b.column('total')


def test_sequential_protocol_phases():
    experiment = _config.loads_config(SEQUENTIAL)
    nets, trace, metrics, state = _trainer.run(experiment)
    assert trace.column('phase') == ['FPDATA'] * 3 + ['FPRESIDUAL'] * 3 + \
        ['FPJOINT'] * 3
    assert all(v is not None for v in trace.column('normalization', 'FPJOINT'))
    assert all(v is not None for v in trace.column('pinning', 'FPRESIDUAL'))
    assert _numpy.isfinite(metrics.rel_l2)
    assert sorted(nets) == ['boundary', 'domain']


def test_residual_phase_freezes_the_boundary_network():
    experiment, problem, nets, state = _setup(SEQUENTIAL)
    plans = _protocol.sequential_fp_plans(experiment, problem)
    residual = [p for p in plans if p.name == 'FPRESIDUAL'][0]
    new, _, _ = _trainer.train_phase(nets, problem, residual, state)
    assert new['boundary'].equals(nets['boundary'])
    assert not new['domain'].equals(nets['domain'])


def test_sequential_protocol_needs_two_networks():
    experiment = _config.loads_config(SEQUENTIAL)
    experiment.set('NETWORKS', 1)
    with _pytest.raises(_error.ConfigurationError):
        _trainer.run(experiment)


def test_checkpoint_round_trip(tmp_path):
    experiment = _config.loads_config(SMALL)
    experiment.section('PHASE', key='PHASE2').set('EPOCHS', 0)
    nets, trace, _, state = _trainer.run(experiment)
    path = str(tmp_path / 'checkpoint')
    _trainer.save_checkpoint(path, nets, state.alm, epoch=len(trace))
    restored, alm, epoch = _trainer.load_checkpoint(path)
    assert _same_nets(restored, nets)
    assert epoch == 12
    _numpy_testing.assert_array_equal(
        alm['boundary'].lambdas, state.alm['boundary'].lambdas)
    assert alm['boundary'].rho == state.alm['boundary'].rho


def test_checkpoint_keeps_sine_frequencies(tmp_path):
    nets = {'domain': _diffnet.init_siren([2, 5, 1], omega0=12.5, seed=3)}
    path = str(tmp_path / 'siren')
    _checkpoint.save_checkpoint(path, nets, {})
    restored, alm, epoch = _checkpoint.load_checkpoint(path)
    assert restored['domain'].layers[0].activation.omega0 == 12.5
    assert restored['domain'].equals(nets['domain'])
    assert alm == {} and epoch == 0


def test_missing_checkpoint(tmp_path):
    with _pytest.raises(_error.ConfigurationError):
        _checkpoint.load_checkpoint(str(tmp_path / 'nothing'))
