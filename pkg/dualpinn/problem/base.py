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

import logging as _logging

import numpy as _numpy

from .. import diffnet as _diffnet
from .. import error as _error


_LOG = _logging.getLogger(__name__)

_PROBLEM = {}

# constraint channels
VALUE = 'value'
RATE = 'rate'


class Constraint (object):
    """A set of constraint points with targets on one jet channel

    ``channel`` is ``VALUE`` (constrain ``u``) or ``RATE`` (constrain
    the derivative along ``axis``).  The multipliers of a constraint
    are indexed by its points, so a constraint keeps its point set
    for the whole phase.
    """
    def __init__(self, name, points, targets, channel=VALUE, axis=None):
        self.name = name
        self.points = _numpy.asarray(points, dtype=_numpy.float64)
        self.targets = _numpy.asarray(targets, dtype=_numpy.float64)
        self.channel = channel
        self.axis = axis
        if self.targets.shape != (self.points.shape[0],):
            raise _error.ContractViolation(
                '{} targets of shape {} do not match {} points'.format(
                    name, self.targets.shape, self.points.shape[0]))
        if channel == RATE and axis is None:
            raise _error.ContractViolation(
                'rate constraint {} needs an axis'.format(name))

    def __repr__(self):
        return '<{}.{} {} n:{} channel:{}>'.format(
            self.__module__, type(self).__name__, self.name, len(self),
            self.channel)

    def __len__(self):
        return self.points.shape[0]

    def violation(self, jet):
        """``c(x)`` for the combined jet at the constraint points
        """
        if self.channel == VALUE:
            return jet.value - self.targets
        return jet.grad[:, self.axis] - self.targets

    def cotangent(self, d_violation, dim):
        """Lift ``dL/dc`` onto the constrained jet channel
        """
        d_violation = _numpy.asarray(d_violation, dtype=_numpy.float64)
        jet = _diffnet.Jet.zeros(d_violation.shape[0], dim)
        if self.channel == VALUE:
            jet.value = d_violation.copy()
        else:
            jet.grad[:, self.axis] = d_violation
        return jet


class Problem (object):
    """A benchmark PDE ``A[u] = f`` with Dirichlet (and initial) data

    Subclasses set ``name``, ``domain`` and implement ``operator``
    (the residual and its partials with respect to the jet channels),
    ``exact_jet`` and the constraint targets.
    """
    name = None
    # names of the constraint sets, each with its own multipliers
    constraint_names = ('boundary',)

    def __repr__(self):
        return '<{}.{} name:{}>'.format(
            self.__module__, type(self).__name__, self.name)

    @property
    def dim(self):
        return self.domain.dim

    def _check_jet(self, points, jet):
        points = self.domain.as_points(points)
        if jet.dim != self.dim or len(jet) != points.shape[0]:
            raise _error.ContractViolation(
                'jet n:{} d:{} does not match {} points of {!r}'.format(
                    len(jet), jet.dim, points.shape[0], self))
        return points

    def source(self, points):
        return _numpy.zeros(self.domain.as_points(points).shape[0])

    def operator(self, points, jet):
        """Return ``(A[u], partials)`` with partials shaped like a Jet
        """
        raise NotImplementedError(
            'no operator for {!r}'.format(self))

    def residual(self, points, jet):
        """Residual ``A[u] - f`` and its partials w.r.t. the jet channels
        """
        points = self._check_jet(points, jet)
        value, partials = self.operator(points, jet)
        return value - self.source(points), partials

    def exact_jet(self, points):
        raise NotImplementedError(
            'no exact solution for {!r}'.format(self))

    def exact(self, points):
        return self.exact_jet(points).value

    @property
    def has_exact(self):
        try:
            self.exact_jet(self.domain.low[None, :])
        except NotImplementedError:
            return False
        return True

    def _check_on_boundary(self, points):
        points = self.domain.as_points(points)
        distances = self.domain.distances(points)
        if _numpy.any(distances > 1e-12):
            raise _error.ContractViolation(
                'points off the boundary of {!r}'.format(self))
        return points

    def boundary_value(self, points):
        """Dirichlet targets (the exact solution restricted to the boundary)
        """
        points = self._check_on_boundary(points)
        return self.exact(points)

    def initial_value(self, points):
        raise _error.ConfigurationError(
            '{} has no initial data'.format(self.name))

    def constraints(self, boundary_points, initial_points=None):
        """Build the constraint sets from sampled points
        """
        points = self.domain.as_points(boundary_points)
        return [Constraint(
            name='boundary', points=points,
            targets=self.boundary_value(points))]
