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

import dualpinn.error as _error
import dualpinn.geometry as _geometry
import dualpinn.seeding as _seeding


SQUARE = _geometry.Rect(0, 1, 0, 1)


def _rng(label='test'):
    return _seeding.substream(0, label)


def test_distances_on_the_square():
    d = SQUARE.distances([[0.5, 0.5], [0.1, 0.7], [1.0, 0.3], [0.95, 0.98]])
    _numpy_testing.assert_allclose(d, [0.5, 0.1, 0.0, 0.02])


def test_spacetime_distance_ignores_time():
    domain = _geometry.SpaceTime(0, 1, 0, 1)
    d = domain.distances([[0.3, 0.0], [0.5, 0.99], [0.0, 0.5]])
    _numpy_testing.assert_allclose(d, [0.3, 0.5, 0.0])


def test_points_outside_are_a_contract_violation():
    with _pytest.raises(_error.ContractViolation):
        SQUARE.distances([[1.5, 0.5]])


def test_invalid_bounds():
    with _pytest.raises(_error.ConfigurationError):
        _geometry.Interval(1.0, 1.0)


def test_uniform_points_are_strictly_inside():
    points = _geometry.sample_uniform(SQUARE, 7000, _rng()).points
    assert points.shape == (7000, 2)
    assert (SQUARE.distances(points) > 0).all()


def test_samplers_are_deterministic():
    a = _geometry.sample_uniform(SQUARE, 50, _rng('same')).points
    b = _geometry.sample_uniform(SQUARE, 50, _rng('same')).points
    _numpy_testing.assert_array_equal(a, b)


def test_zero_points_is_a_contract_violation():
    with _pytest.raises(_error.ContractViolation):
        _geometry.sample_uniform(SQUARE, 0, _rng())


def test_lhs_edges_stratify_each_edge():
    n = 300
    points = _geometry.sample_lhs_edges(SQUARE, n, _rng()).points
    assert points.shape == (4 * n, 2)
    bottom = points[:n]
    _numpy_testing.assert_array_equal(bottom[:, 1], 0.0)
    strata = _numpy.floor(bottom[:, 0] * n).astype(int)
    assert sorted(strata.tolist()) == list(range(n))


def test_ring_points_stay_in_the_band():
    points = _geometry.sample_ring(SQUARE, 8000, 0.1, _rng()).points
    d = SQUARE.distances(points)
    assert points.shape == (8000, 2)
    assert ((d > 0) & (d < 0.1)).all()


def test_interval_ring_hugs_both_ends():
    points = _geometry.sample_ring(
        _geometry.Interval(0, 1), 500, 0.25, _rng()).points[:, 0]
    assert (((points > 0) & (points < 0.25)) |
            ((points > 0.75) & (points < 1))).all()
    assert (points < 0.5).any() and (points > 0.5).any()


@_pytest.mark.parametrize('delta', [0.0, 0.5, 0.7])
def test_ring_width_out_of_range(delta):
    with _pytest.raises(_error.ConfigurationError):
        _geometry.sample_ring(SQUARE, 10, delta, _rng())


def test_boundary_of_an_interval_is_its_endpoints():
    points = _geometry.sample_boundary(_geometry.Interval(-2.5, 2.5), 500, None)
    assert points.points.ravel().tolist() == [-2.5, 2.5]


def test_spacetime_boundary_and_initial_points():
    domain = _geometry.SpaceTime(0, 1, 0, 1)
    boundary = _geometry.sample_boundary(domain, 100, _rng()).points
    assert boundary.shape == (200, 2)
    assert set(boundary[:, 0].tolist()) == set([0.0, 1.0])
    initial = _geometry.sample_initial(domain, 100, _rng()).points
    _numpy_testing.assert_array_equal(initial[:, 1], 0.0)
    assert ((initial[:, 0] > 0) & (initial[:, 0] < 1)).all()


def test_initial_points_need_spacetime():
    with _pytest.raises(_error.ConfigurationError):
        _geometry.sample_initial(SQUARE, 10, _rng())


def test_focused_mix_counts():
    points = _geometry.sample_focused(SQUARE, 1000, 0.1, 0.5, _rng()).points
    assert points.shape == (1000, 2)
    d = SQUARE.distances(points)
    assert (d[:500] < 0.1).all()


def test_residual_topk_keeps_largest_scores():
    def score(points):
        return points[:, 0]

    points = _geometry.sample_residual_topk(
        SQUARE, 100, score, _rng(), pool_factor=4).points
    pool = _geometry.sample_uniform(SQUARE, 400, _rng()).points
    threshold = _numpy.sort(pool[:, 0])[-100]
    assert points.shape == (100, 2)
    assert (points[:, 0] >= threshold).all()


def test_bad_fractions():
    with _pytest.raises(_error.ConfigurationError):
        _geometry.sample_focused(SQUARE, 10, 0.1, 0.8, _rng(),
                                 residual_fraction=0.5, score=lambda p: p[:, 0])


def test_grids():
    grid = _geometry.uniform_grid(SQUARE, [3, 4])
    assert grid.shape == (12, 2)
    _numpy_testing.assert_array_equal(grid[0], [0.0, 0.0])
    _numpy_testing.assert_array_equal(grid[-1], [1.0, 1.0])
    boundary = _geometry.boundary_grid(SQUARE, 11)
    assert boundary.shape == (44, 2)
    _numpy_testing.assert_array_equal(SQUARE.distances(boundary), 0.0)


def test_default_delta_fits_inside():
    assert 0 < _geometry.default_delta(SQUARE) < SQUARE.inradius()
    interval = _geometry.Interval(-2.5, 2.5)
    assert _geometry.default_delta(interval) == 0.5
