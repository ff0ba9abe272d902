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

"""Error metrics of trained networks against exact solutions

>>> import numpy
>>> exact = numpy.array([1.0, -2.0, 3.0])
>>> record = compute_metrics(1.1 * exact, exact)
>>> round(record.rel_l2, 12), round(record.accuracy_pct, 10)
(0.1, 90.0)
"""

import logging as _logging

import numpy as _numpy

from .. import diffnet as _diffnet
from .. import error as _error
from .. import geometry as _geometry


_LOG = _logging.getLogger(__name__)

# table and CSV order
METRICS = [
    'mae',
    'rmse',
    'rel_l2',
    'accuracy_pct',
    'boundary_l2',
    'pde_residual_l2',
    ]

LABELS = {
    'mae': 'MAE',
    'rmse': 'RMSE',
    'rel_l2': 'Rel. L2',
    'accuracy_pct': 'Accuracy (%)',
    'boundary_l2': 'BC L2',
    'pde_residual_l2': 'PDE L2',
    }

# axis names per domain kind, for slice specs
AXES = {
    'RECT': ('x', 'y'),
    'SPACETIME': ('x', 't'),
    'INTERVAL': ('x',),
    }


class MetricsRecord (object):
    """Test-grid errors of one run

    ``boundary_l2`` and ``pde_residual_l2`` are ``None`` when they were
    not computed.  ``accuracy_pct`` is ``100 (1 - rel_l2)`` and goes
    negative when the relative error exceeds one.
    """
    def __init__(self, mae, rmse, rel_l2, boundary_l2=None,
                 pde_residual_l2=None, seed=None, fingerprint=None,
                 epochs_run=None, wall_clock_s=None):
        for name, value in [('mae', mae), ('rmse', rmse), ('rel_l2', rel_l2),
                            ('boundary_l2', boundary_l2),
                            ('pde_residual_l2', pde_residual_l2)]:
            if value is not None and not value >= 0:
                raise _error.ContractViolation(
                    '{} must be nonnegative, not {}'.format(name, value))
        self.mae = float(mae)
        self.rmse = float(rmse)
        self.rel_l2 = float(rel_l2)
        self.accuracy_pct = 100.0 * (1.0 - self.rel_l2)
        if self.accuracy_pct < 0:
            _LOG.warning('negative accuracy {:.4g}% (relative L2 {:.4g})'.format(
                self.accuracy_pct, self.rel_l2))
        self.boundary_l2 = boundary_l2
        self.pde_residual_l2 = pde_residual_l2
        self.seed = seed
        self.fingerprint = fingerprint
        self.epochs_run = epochs_run
        self.wall_clock_s = wall_clock_s

    def __repr__(self):
        return '<{}.{} mae:{:.4g} rel_l2:{:.4g}>'.format(
            self.__module__, type(self).__name__, self.mae, self.rel_l2)

    def as_dict(self):
        return dict((name, getattr(self, name)) for name in METRICS)


def compute_metrics(predicted, exact, boundary_error=None, residuals=None):
    """Metrics from values on the test grid

    ``boundary_error`` holds ``û - g`` on the boundary grid and
    ``residuals`` the PDE residuals on the interior grid.

    >>> import numpy
    >>> u = numpy.linspace(0.5, 1.5, 11)
    >>> r = compute_metrics(u, u, boundary_error=numpy.zeros(4))
    >>> r.mae, r.rmse, r.rel_l2, r.accuracy_pct, r.boundary_l2
    (0.0, 0.0, 0.0, 100.0, 0.0)
    """
    predicted = _numpy.asarray(predicted, dtype=_numpy.float64)
    exact = _numpy.asarray(exact, dtype=_numpy.float64)
    if predicted.shape != exact.shape or not exact.size:
        raise _error.ContractViolation(
            'cannot compare predictions {} with exact values {}'.format(
                predicted.shape, exact.shape))
    norm = _numpy.linalg.norm(exact)
    if not norm > 0:
        raise _error.ContractViolation('exact solution vanishes on the grid')
    error = predicted - exact
    boundary_l2 = pde_residual_l2 = None
    if boundary_error is not None:
        boundary_error = _numpy.asarray(boundary_error, dtype=_numpy.float64)
        boundary_l2 = float(_numpy.sqrt(_numpy.mean(boundary_error ** 2)))
    if residuals is not None:
        residuals = _numpy.asarray(residuals, dtype=_numpy.float64)
        pde_residual_l2 = float(_numpy.sqrt(_numpy.mean(residuals ** 2)))
    return MetricsRecord(
        mae=float(_numpy.mean(_numpy.abs(error))),
        rmse=float(_numpy.sqrt(_numpy.mean(error ** 2))),
        rel_l2=float(_numpy.linalg.norm(error) / norm),
        boundary_l2=boundary_l2,
        pde_residual_l2=pde_residual_l2)


def evaluation_grid(domain, counts=None):
    """Deterministic evaluation grid (256 nodes in 1-D, 100 per axis otherwise)
    """
    if counts is None:
        counts = [256] if domain.dim == 1 else [100] * domain.dim
    return _geometry.uniform_grid(domain, counts)


def default_boundary_grid(domain, n=None):
    if n is None:
        n = 500 if isinstance(domain, _geometry.SpaceTime) else 1000
    return _geometry.boundary_grid(domain, n)


def combined_values(nets, points):
    """``Σ_role u_role`` at ``points``
    """
    return sum(_diffnet.evaluate_values(nets[role], points)
               for role in sorted(nets))


def combined_jet(nets, points):
    jets = [_diffnet.forward_jet(nets[role], points) for role in sorted(nets)]
    jet = jets[0]
    for other in jets[1:]:
        jet = jet + other
    return jet


def evaluate(nets, problem, grid=None, boundary_grid=None):
    """MetricsRecord of ``nets`` (a role -> MlpParams dict) on ``problem``

    ``grid`` is a list of nodes per axis, ``boundary_grid`` the nodes
    per edge or face.
    """
    if not problem.has_exact:
        raise _error.ConfigurationError(
            '{} has no exact solution to evaluate against'.format(
                problem.name))
    points = evaluation_grid(problem.domain, counts=grid)
    predicted = combined_values(nets, points)
    exact = problem.exact(points)
    jet = combined_jet(nets, points)
    residuals, _ = problem.residual(points, jet)
    bpoints = default_boundary_grid(problem.domain, n=boundary_grid)
    boundary_error = combined_values(nets, bpoints) - \
        problem.boundary_value(bpoints)
    record = compute_metrics(
        predicted, exact, boundary_error=boundary_error, residuals=residuals)
    _LOG.info('{} rel L2 {:.4g}, MAE {:.4g}, BC L2 {:.4g}'.format(
        problem.name, record.rel_l2, record.mae, record.boundary_l2))
    return record


SLICE_COLUMNS = ['coordinate', 'u_domain', 'u_boundary', 'u_hat', 'u_exact',
                 'abs_error']


def _table(nets, problem, points, coordinate):
    u_d = _diffnet.evaluate_values(nets['domain'], points)
    if 'boundary' in nets:
        u_b = _diffnet.evaluate_values(nets['boundary'], points)
    else:
        u_b = _numpy.zeros(points.shape[0])
    u_hat = u_d + u_b
    exact = problem.exact(points)
    rows = []
    for values in zip(coordinate, u_d, u_b, u_hat, exact,
                      _numpy.abs(u_hat - exact)):
        rows.append(dict(zip(SLICE_COLUMNS, [float(v) for v in values])))
    return rows


def slice_table(nets, problem, axis='y', value=0.8, points=512):
    """Rows along the line where ``axis`` equals ``value``

    The coordinate column runs along the other axis of a 2-D domain;
    the domain and boundary networks are listed next to their sum.
    """
    domain = problem.domain
    names = AXES.get(domain.name, ())
    if len(names) != 2:
        raise _error.ConfigurationError(
            'slices need a 2-D problem, not {}'.format(domain.name))
    if axis not in names:
        raise _error.ConfigurationError(
            'no axis {!r} in {} (axes {})'.format(
                axis, domain.name, ', '.join(names)))
    fixed = names.index(axis)
    low, high = domain.bounds[fixed]
    if not low <= value <= high:
        raise _error.ConfigurationError(
            '{} = {} lies outside [{:g}, {:g}]'.format(axis, value, low, high))
    free = 1 - fixed
    coordinate = _numpy.linspace(
        domain.bounds[free][0], domain.bounds[free][1], points)
    grid = _numpy.empty((points, 2))
    grid[:, free] = coordinate
    grid[:, fixed] = value
    return _table(nets, problem, grid, coordinate)


def profile(nets, problem, points=512):
    """Rows across a 1-D domain
    """
    domain = problem.domain
    if domain.dim != 1:
        raise _error.ConfigurationError(
            'profiles need a 1-D problem, not {}'.format(domain.name))
    coordinate = _numpy.linspace(domain.low[0], domain.high[0], points)
    return _table(nets, problem, coordinate[:, None], coordinate)
