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

import numpy as _numpy
import numpy.testing as _numpy_testing
import pytest as _pytest

import dualpinn.diffnet as _diffnet
import dualpinn.error as _error
import dualpinn.geometry as _geometry
import dualpinn.problem as _problem
import dualpinn.problem.fokker_planck as _fokker_planck
import dualpinn.problem.wave as _wave
import dualpinn.seeding as _seeding


def _interior(problem, n=1000):
    return _geometry.sample_uniform(
        problem.domain, n, _seeding.substream(1, 'test/interior')).points


@_pytest.mark.parametrize('name', ['FOKKER-PLANCK', 'LAPLACE', 'POISSON',
                                   'WAVE'])
def test_exact_solution_has_no_residual(name):
    problem = _problem.get(name)
    points = _interior(problem)
    residual, _ = problem.residual(points, problem.exact_jet(points))
    assert _numpy.abs(residual).max() <= 1e-10


def test_registry():
    assert sorted(_problem.PROBLEM) == [
        'FOKKER-PLANCK', 'LAPLACE', 'POISSON', 'WAVE']
    with _pytest.raises(_error.ConfigurationError):
        _problem.get('HEAT')


def test_laplace_values():
    laplace = _problem.get('laplace')
    _numpy_testing.assert_allclose(
        laplace.exact([[1.0, 0.8], [1.0, 0.0], [0.0, 0.5]]),
        [-0.2095, 0.0625, 0.0], atol=1e-12)


def test_poisson_peak():
    poisson = _problem.get('POISSON')
    _numpy_testing.assert_allclose(
        poisson.exact([[0.5, 0.5]]), [1 / (2 * _numpy.pi**2)])
    _numpy_testing.assert_allclose(
        poisson.boundary_value([[0.2, 1.0], [0.0, 0.4]]), [0.0, 0.0],
        atol=1e-15)


def test_fokker_planck_normalization():
    problem = _problem.get('FOKKER-PLANCK')
    grid = _fokker_planck.normalization_grid(problem)
    assert grid.shape == (501, 1)
    mass = _fokker_planck.fp_mass(problem.exact(grid), problem.dx)
    assert abs(mass - 1) < 1e-12
    assert problem.exact([[2.5]])[0] < 1e-6 * problem.exact([[1.0]])[0]


def test_fokker_planck_residual_of_a_constant():
    problem = _problem.get('FOKKER-PLANCK')
    jet = _diffnet.Jet(value=[1.0], grad=[[0.0]], hess=[[0.0]])
    residual, partials = problem.residual([[0.0]], jet)
    _numpy_testing.assert_allclose(residual, [-0.3])
    _numpy_testing.assert_allclose(partials.hess, [[0.125]])


def test_fokker_planck_rejects_bad_sigma():
    with _pytest.raises(_error.ConfigurationError):
        _problem.get('FOKKER-PLANCK', sigma=0.0)


def test_residual_partials_are_linear():
    problem = _problem.get('WAVE')
    points = _interior(problem, 20)
    jet = problem.exact_jet(points)
    residual, partials = problem.residual(points, jet)
    linear = (partials.value * jet.value +
              _numpy.sum(partials.grad * jet.grad, axis=1) +
              _numpy.sum(partials.hess * jet.hess, axis=1))
    _numpy_testing.assert_allclose(linear, residual, atol=1e-10)


def test_wave_initial_data():
    wave = _problem.get('WAVE')
    value, rate = wave.initial_value([[0.5, 0.0], [0.125, 0.0]])
    _numpy_testing.assert_allclose(
        value, [1.0, _numpy.sin(_numpy.pi / 8) + 0.5], atol=1e-12)
    _numpy_testing.assert_array_equal(rate, [0.0, 0.0])
    with _pytest.raises(_error.ContractViolation):
        wave.initial_value([[0.5, 0.1]])


def test_wave_constraint_sets():
    wave = _problem.get('WAVE', c=2.0)
    rng = _seeding.substream(0, 'test/wave')
    boundary = _geometry.sample_boundary(wave.domain, 10, rng).points
    initial = _geometry.sample_initial(wave.domain, 15, rng).points
    constraints = wave.constraints(boundary, initial_points=initial)
    assert [c.name for c in constraints] == list(wave.constraint_names)
    assert [len(c) for c in constraints] == [20, 15, 15]
    rate = constraints[2]
    jet = wave.exact_jet(initial)
    _numpy_testing.assert_allclose(rate.violation(jet), 0.0, atol=1e-12)
    value = constraints[1]
    _numpy_testing.assert_allclose(value.violation(jet), 0.0, atol=1e-12)


def test_boundary_targets_need_boundary_points():
    with _pytest.raises(_error.ContractViolation):
        _problem.get('LAPLACE').boundary_value([[0.5, 0.5]])


def test_modal_coefficients_of_the_initial_condition():
    wave = _problem.get('WAVE')

    def u0(x):
        points = _numpy.column_stack([x, _numpy.zeros_like(x)])
        return wave.exact(points)

    assert abs(_wave.modal_coefficient(u0, 1, 256) - 1.0) < 1e-4
    assert abs(_wave.modal_coefficient(u0, 4, 256) - 0.5) < 1e-3
    assert abs(_wave.modal_coefficient(u0, 2, 256)) < 1e-4


def test_trapezoid_weights_integrate_linear_functions():
    x = _wave.quadrature_nodes(16)
    weights = _wave.trapezoid_weights(x)
    _numpy_testing.assert_allclose(weights.dot(x), 0.5)
    _numpy_testing.assert_allclose(weights.sum(), 1.0)
