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

"""One-dimensional wave equation on ``(x, t) ∈ [0, 1]²``

``u_tt - c² u_xx = 0`` with ``u(0, t) = u(1, t) = 0``,
``u(x, 0) = sin(πx) + sin(4πx)/2`` and ``u_t(x, 0) = 0``.  The
exact solution superposes the two standing modes
``Σ_n a_n(0) sin(nπx) cos(c n π t)``.

>>> problem = Wave()
>>> float(problem.boundary_value([[0.0, 0.37]])[0])
0.0
>>> value, rate = problem.initial_value([[0.5, 0.0]])
>>> round(float(value[0]), 12), float(rate[0])
(1.0, 0.0)
"""

import numpy as _numpy
from scipy import integrate as _integrate

from .. import diffnet as _diffnet
from .. import error as _error
from .. import geometry as _geometry
from . import base as _base


# initial sine-mode amplitudes a_n(0)
MODES = {1: 1.0, 4: 0.5}


class Wave (_base.Problem):
    name = 'WAVE'
    constraint_names = ('boundary', 'initial', 'initial_rate')

    def __init__(self, c=2.0, domain=None, modes=None):
        if not c > 0:
            raise _error.ConfigurationError(
                'wave speed must be positive, not {}'.format(c))
        if domain is None:
            domain = _geometry.SpaceTime(0, 1, 0, 1)
        if modes is None:
            modes = dict(MODES)
        self.c = float(c)
        self.domain = domain
        self.modes = modes

    def operator(self, points, jet):
        partials = _diffnet.Jet.zeros(len(jet), 2)
        partials.hess[:, 0] = -self.c**2
        partials.hess[:, 1] = 1.0
        return jet.hess[:, 1] - self.c**2 * jet.hess[:, 0], partials

    def exact_jet(self, points):
        points = self.domain.as_points(points)
        x, t = points[:, 0], points[:, 1]
        value = _numpy.zeros(points.shape[0])
        grad = _numpy.zeros(points.shape)
        hess = _numpy.zeros(points.shape)
        for n, amplitude in sorted(self.modes.items()):
            k = n * _numpy.pi
            w = self.c * k
            sx, cx = _numpy.sin(k * x), _numpy.cos(k * x)
            st, ct = _numpy.sin(w * t), _numpy.cos(w * t)
            value += amplitude * sx * ct
            grad[:, 0] += amplitude * k * cx * ct
            grad[:, 1] -= amplitude * w * sx * st
            hess[:, 0] -= amplitude * k * k * sx * ct
            hess[:, 1] -= amplitude * w * w * sx * ct
        return _diffnet.Jet(value=value, grad=grad, hess=hess)

    def boundary_value(self, points):
        points = self._check_on_boundary(points)
        return _numpy.zeros(points.shape[0])

    def initial_value(self, points):
        """``(u target, u_t target)`` on the surface ``t = t0``
        """
        points = self.domain.as_points(points)
        if _numpy.any(_numpy.abs(points[:, 1] - self.domain.t0) > 1e-12):
            raise _error.ContractViolation('points off the initial surface')
        x = points[:, 0]
        value = _numpy.zeros(x.shape[0])
        for n, amplitude in sorted(self.modes.items()):
            value += amplitude * _numpy.sin(n * _numpy.pi * x)
        return value, _numpy.zeros(x.shape[0])

    def constraints(self, boundary_points, initial_points=None):
        constraints = super(Wave, self).constraints(boundary_points)
        if initial_points is None:
            raise _error.ContractViolation('wave constraints need t=0 points')
        initial_points = self.domain.as_points(initial_points)
        value, rate = self.initial_value(initial_points)
        constraints.extend([
            _base.Constraint(name='initial', points=initial_points,
                             targets=value),
            _base.Constraint(name='initial_rate', points=initial_points,
                             targets=rate, channel=_base.RATE, axis=1),
            ])
        return constraints


def quadrature_nodes(quad_points, x0=0.0, x1=1.0):
    if quad_points < 16:
        raise _error.ContractViolation(
            'need at least 16 quadrature points, not {}'.format(quad_points))
    return _numpy.linspace(x0, x1, quad_points)


def trapezoid_weights(x):
    """Weights ``w`` with ``w · y == trapezoid(y, x)``
    """
    return _integrate.trapezoid(_numpy.eye(x.shape[0]), x=x, axis=1)


def modal_coefficient(u_slice, n, quad_points=128):
    """``a_n = 2 ∫₀¹ u(x) sin(nπx) dx`` by the composite trapezoid rule

    ``u_slice`` maps an array of ``x`` nodes to values.

    >>> import numpy
    >>> a1 = modal_coefficient(lambda x: numpy.sin(numpy.pi * x), 1, 256)
    >>> a4 = modal_coefficient(lambda x: numpy.sin(numpy.pi * x), 4, 256)
    >>> abs(a1 - 1) < 1e-6, abs(a4) < 1e-6
    (True, True)
    """
    if n < 1:
        raise _error.ContractViolation(
            'mode index must be >= 1, not {}'.format(n))
    x = quadrature_nodes(quad_points)
    y = _numpy.asarray(u_slice(x), dtype=_numpy.float64)
    return float(2.0 * _integrate.trapezoid(y * _numpy.sin(n * _numpy.pi * x),
                                            x=x))
