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

import dualpinn.diffnet as _diffnet
import dualpinn.error as _error
import dualpinn.geometry as _geometry
import dualpinn.objective as _objective
import dualpinn.problem as _problem
import dualpinn.seeding as _seeding


def test_alm_penalty_matches_closed_form():
    state = _objective.AlmState([0.5, -1.0, 2.0], rho=3.0)
    c = _numpy.array([0.1, 0.2, -0.3])
    value, d_c = _objective.alm_penalty(state, c)
    expected = _numpy.mean(state.lambdas * c + 1.5 * c * c)
    assert abs(value - expected) < 1e-15
    _numpy_testing.assert_allclose(d_c, (state.lambdas + 3.0 * c) / 3)


def test_alm_penalty_vanishes_when_satisfied():
    state = _objective.AlmState([4.0, -7.0], rho=10.0)
    value, d_c = _objective.alm_penalty(state, [0.0, 0.0])
    assert value == 0.0
    _numpy_testing.assert_allclose(d_c, [2.0, -3.5])


def test_alm_update_moves_and_clips():
    state = _objective.AlmState([0.0, 99.0, -99.0], rho=2.0, Lambda=100.0)
    updated = _objective.alm_update(state, [0.25, 1.0, -1.0])
    assert updated.lambdas.tolist() == [0.5, 100.0, -100.0]
    assert updated.rho == 2.0
    assert state.lambdas.tolist() == [0.0, 99.0, -99.0]


def test_rho_ramp_is_monotone_and_capped():
    state = _objective.AlmState([0.0], rho=1.0, eta=2.0, rho_max=10.0)
    rhos = []
    for _ in range(6):
        state = _objective.rho_ramp(state)
        rhos.append(state.rho)
    assert rhos == [2.0, 4.0, 8.0, 10.0, 10.0, 10.0]


@_pytest.mark.parametrize('kwargs', [
    {'rho': 0.0},
    {'eta': 0.5},
    {'k': 0},
    {'rho': 200.0, 'rho_max': 100.0},
    ])
def test_bad_alm_settings(kwargs):
    with _pytest.raises(_error.ConfigurationError):
        _objective.AlmState([0.0], **kwargs)


def test_gamma_schedule_endpoints_and_monotonicity():
    schedule = _objective.GammaSchedule(gamma_min=0.01, gamma_max=1.0, T=200)
    values = [_objective.gamma(schedule, t) for t in range(201)]
    assert values[0] == 1.0
    assert values[-1] == 0.01
    assert all(a >= b for a, b in zip(values, values[1:]))
    assert abs(values[100] - 0.505) < 1e-12


def test_gamma_outside_the_schedule_is_clamped():
    schedule = _objective.GammaSchedule(gamma_min=0.1, gamma_max=1.0, T=10)
    assert _objective.gamma(schedule, 15) == 0.1
    assert _objective.gamma(schedule, -3) == 1.0


def test_constant_schedule():
    schedule = _objective.GammaSchedule.constant(0.7)
    assert _objective.gamma(schedule, 0) == 0.7
    assert _objective.gamma(schedule, 1000) == 0.7


def test_bad_schedule():
    with _pytest.raises(_error.ConfigurationError):
        _objective.GammaSchedule(gamma_min=2.0, gamma_max=1.0, T=10)


def test_boundary_weight_decays():
    w = _objective.boundary_weight([0.0, 0.1, 0.5], 0.1)
    _numpy_testing.assert_allclose(w, [1.0, _math.exp(-1), _math.exp(-5)])
    _numpy_testing.assert_allclose(
        _objective.interior_weight([0.0], 0.1), [0.0])
    with _pytest.raises(_error.ContractViolation):
        _objective.boundary_weight([-0.1], 0.1)


def test_role_loss_separates_roles():
    config = _objective.RolePriorConfig(tau=0.1, alpha_int=2.0, alpha_bd=3.0)
    # u_D on the boundary costs alpha_int, u_B deep inside costs ~alpha_bd
    value, d_u_d, d_u_b = _objective.role_loss(
        [0.0, 10.0], [1.0, 1.0], [1.0, 1.0], config)
    expected = 2.0 * (1.0 + _math.exp(-100)) / 2 + \
        3.0 * (0.0 + 1.0 - _math.exp(-100)) / 2
    assert abs(value - expected) < 1e-12
    _numpy_testing.assert_allclose(d_u_d, [2.0, 2.0 * _math.exp(-100)])
    _numpy_testing.assert_allclose(d_u_b, [0.0, 3.0], atol=1e-15)


def test_role_prior_without_weights_is_disabled():
    config = _objective.RolePriorConfig(tau=0.1, alpha_int=0.0, alpha_bd=0.0)
    assert not config.enabled
    with _pytest.raises(_error.ConfigurationError):
        _objective.RolePriorConfig(tau=0.0)


def test_physics_loss_of_the_exact_solution_vanishes():
    problem = _problem.get('POISSON')
    points = _geometry.sample_uniform(
        problem.domain, 200, _seeding.substream(0, 'test/physics')).points
    exact = problem.exact_jet(points)
    half = exact.scaled(0.5)
    value, cotangent = _objective.physics_loss(problem, points, half, half)
    assert value < 1e-25
    assert _numpy.abs(cotangent.value).max() < 1e-12


def test_physics_cotangent_is_the_jet_derivative():
    problem = _problem.get('FOKKER-PLANCK')
    points = _geometry.sample_uniform(
        problem.domain, 50, _seeding.substream(0, 'test/physics')).points
    rng = _seeding.substream(1, 'test/physics/jet')
    jet = _diffnet.Jet(value=rng.normal(size=50),
                       grad=rng.normal(size=(50, 1)),
                       hess=rng.normal(size=(50, 1)))
    direction = _diffnet.Jet(value=rng.normal(size=50),
                             grad=rng.normal(size=(50, 1)),
                             hess=rng.normal(size=(50, 1)))
    _, cotangent = _objective.physics_loss(problem, points, jet)
    step = 1e-6
    plus, _ = _objective.physics_loss(
        problem, points, jet + direction.scaled(step))
    minus, _ = _objective.physics_loss(
        problem, points, jet + direction.scaled(-step))
    analytic = (_numpy.sum(cotangent.value * direction.value) +
                _numpy.sum(cotangent.grad * direction.grad) +
                _numpy.sum(cotangent.hess * direction.hess))
    _numpy_testing.assert_allclose(
        analytic, (plus - minus) / (2 * step), rtol=1e-6)


def test_modal_prior_vanishes_on_the_exact_wave():
    wave = _problem.get('WAVE')
    times = [0.1, 0.35, 0.8]
    nodes = _objective.modal_nodes(wave, times, 128)
    assert nodes.shape == (3 * 128, 2)
    value, d_values = _objective.modal_prior_loss(
        wave, wave.exact(nodes), times, 128)
    assert value < 1e-20
    assert d_values.shape == (3 * 128,)


def test_modal_prior_penalizes_a_missing_mode():
    wave = _problem.get('WAVE')
    times = [0.0]
    nodes = _objective.modal_nodes(wave, times, 128)
    fundamental = _numpy.sin(_numpy.pi * nodes[:, 0])
    value, _ = _objective.modal_prior_loss(wave, fundamental, times, 128)
    assert abs(value - 0.25) < 1e-10


def test_modal_prior_needs_the_wave_problem():
    with _pytest.raises(_error.ConfigurationError):
        _objective.modal_nodes(_problem.get('LAPLACE'), [0.5], 32)


def test_total_loss_weights():
    breakdown = _objective.total_loss(
        physics=1.0, alm={'boundary': 2.0, 'initial': 4.0}, role=3.0,
        w_bc=10.0, gamma=0.5, constraint_weights={'initial': 0.5})
    assert breakdown.total == 1.0 + 10.0 * 2.0 + 10.0 * 0.5 * 4.0 + 1.5
    assert breakdown.alm_total() == 6.0
    labels = [label for label, _ in breakdown.weighted()]
    assert labels == ['physics', 'alm/boundary', 'alm/initial', 'role']


def test_total_loss_names_the_bad_part():
    with _pytest.raises(_error.TrainingAborted) as info:
        _objective.total_loss(physics=1.0, alm={'boundary': float('inf')})
    assert info.value.part == 'alm/boundary'


def test_fp_helpers():
    value, derivative = _objective.fp_constraint_loss(0.9)
    assert abs(value - 0.01) < 1e-15
    assert abs(derivative + 0.2) < 1e-15
    value, d = _objective.data_loss([1.0, 2.0], [1.0, 1.0])
    assert value == 0.5
    _numpy_testing.assert_allclose(d, [0.0, 1.0])
