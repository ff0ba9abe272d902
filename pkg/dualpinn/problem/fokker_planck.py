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

"""Stationary one-dimensional Fokker–Planck equation

``-d/dx[(a x - b x³) u] + (σ²/2) u'' = 0`` with the normalization
``Δx Σ u(x_i) = 1`` over a uniform grid.  The exact density is
``u = C exp[(2 a x² - b x⁴) / (2σ²)]``.

The interval defaults to ``[-2.5, 2.5]``, where the density has
decayed below 1e-6 of its peak; the normalization grid is the
``dx``-spaced grid on that interval and is independent of the training
collocation points.

>>> problem = FokkerPlanck()
>>> abs(fp_mass(problem.exact(normalization_grid(problem)), problem.dx) - 1) < 1e-12
True
>>> jet = problem.exact_jet([[0.0]])
>>> ones = jet.scaled(0.0)
>>> ones.value[:] = 1.0
>>> round(float(problem.residual([[0.0]], ones)[0][0]), 12)
-0.3
"""

import logging as _logging

import numpy as _numpy

from .. import diffnet as _diffnet
from .. import error as _error
from .. import geometry as _geometry
from . import base as _base


_LOG = _logging.getLogger(__name__)

# largest acceptable endpoint density relative to the peak
TAIL_RATIO = 1e-6


class FokkerPlanck (_base.Problem):
    name = 'FOKKER-PLANCK'

    def __init__(self, a=0.3, b=0.5, sigma=0.5, dx=0.01, domain=None):
        if not sigma > 0:
            raise _error.ConfigurationError(
                'sigma must be positive, not {}'.format(sigma))
        if not dx > 0:
            raise _error.ConfigurationError(
                'dx must be positive, not {}'.format(dx))
        if domain is None:
            domain = _geometry.Interval(-2.5, 2.5)
        self.a = float(a)
        self.b = float(b)
        self.sigma = float(sigma)
        self.dx = float(dx)
        self.domain = domain
        self.constant = fp_normalization_constant(self)

    def _exponent(self, x):
        return (2 * self.a * x**2 - self.b * x**4) / (2 * self.sigma**2)

    def unnormalized(self, x):
        return _numpy.exp(self._exponent(_numpy.asarray(x)))

    def drift(self, x):
        return self.a * x - self.b * x**3

    def operator(self, points, jet):
        x = points[:, 0]
        d_drift = self.a - 3 * self.b * x**2
        half_var = self.sigma**2 / 2
        value = -(d_drift * jet.value + self.drift(x) * jet.grad[:, 0]) + \
            half_var * jet.hess[:, 0]
        partials = _diffnet.Jet.zeros(len(jet), 1)
        partials.value[:] = -d_drift
        partials.grad[:, 0] = -self.drift(x)
        partials.hess[:, 0] = half_var
        return value, partials

    def exact_jet(self, points):
        points = self.domain.as_points(points)
        x = points[:, 0]
        u = self.constant * self.unnormalized(x)
        d1 = 2 * self.drift(x) / self.sigma**2
        d2 = 2 * (self.a - 3 * self.b * x**2) / self.sigma**2
        return _diffnet.Jet(
            value=u, grad=(u * d1)[:, None], hess=(u * (d2 + d1 * d1))[:, None])


def normalization_grid(problem):
    """The ``dx``-spaced grid spanning the problem interval, shape ``(m, 1)``
    """
    a, b = problem.domain.bounds[0]
    count = int(round((b - a) / problem.dx)) + 1
    return _numpy.linspace(a, b, count)[:, None]


def fp_normalization_constant(problem):
    """``C = 1 / (Δx Σ exp[(2ax² - bx⁴)/(2σ²)])`` over the normalization grid

    Logs a warning when the density is not negligible at the interval
    ends.
    """
    x = normalization_grid(problem)[:, 0]
    density = problem.unnormalized(x)
    tail = max(density[0], density[-1])
    if tail > TAIL_RATIO * density.max():
        _LOG.warning(
            'Fokker-Planck interval {!r} is too small: endpoint density '
            '{:.3g} of the peak'.format(problem.domain, tail / density.max()))
    return 1.0 / (problem.dx * density.sum())


def fp_mass(values, dx):
    """``Δx Σ u(x_i)`` for values on the normalization grid

    >>> fp_mass([0.0, 0.0], 0.01)
    0.0
    """
    return float(dx * _numpy.sum(values))
