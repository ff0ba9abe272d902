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

"""Two-dimensional Laplace equation on the unit square

``u_xx + u_yy = 0`` with the harmonic polynomial
``u = (x⁵ - 10 x³ y² + 5 x y⁴) / 16`` as exact solution and its
restriction to the boundary as Dirichlet data.

>>> problem = Laplace()
>>> float(problem.exact([[1.0, 0.0]])[0])
0.0625
>>> float(problem.exact([[0.0, 0.37]])[0])
0.0
"""

import numpy as _numpy

from .. import diffnet as _diffnet
from .. import geometry as _geometry
from . import base as _base


def _jet_partials(n, dim, value=0.0, grad=None, hess=None):
    jet = _diffnet.Jet.zeros(n, dim)
    jet.value[:] = value
    if grad is not None:
        jet.grad[:] = grad
    if hess is not None:
        jet.hess[:] = hess
    return jet


class Laplace (_base.Problem):
    name = 'LAPLACE'

    def __init__(self, domain=None):
        if domain is None:
            domain = _geometry.Rect(0, 1, 0, 1)
        self.domain = domain

    def operator(self, points, jet):
        partials = _jet_partials(len(jet), 2, hess=[1.0, 1.0])
        return jet.hess[:, 0] + jet.hess[:, 1], partials

    def exact_jet(self, points):
        points = self.domain.as_points(points)
        x, y = points[:, 0], points[:, 1]
        value = (x**5 - 10 * x**3 * y**2 + 5 * x * y**4) / 16
        u_x = (5 * x**4 - 30 * x**2 * y**2 + 5 * y**4) / 16
        u_y = (-20 * x**3 * y + 20 * x * y**3) / 16
        u_xx = (20 * x**3 - 60 * x * y**2) / 16
        u_yy = (-20 * x**3 + 60 * x * y**2) / 16
        return _diffnet.Jet(
            value=value,
            grad=_numpy.column_stack([u_x, u_y]),
            hess=_numpy.column_stack([u_xx, u_yy]))
