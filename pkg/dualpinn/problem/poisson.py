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

"""Two-dimensional Poisson equation on the unit square

``u_xx + u_yy = f`` with ``f = -sin(πx) sin(πy)`` and exact solution
``u = sin(πx) sin(πy) / (2π²)``.

>>> problem = Poisson()
>>> round(float(problem.exact([[0.5, 0.5]])[0]), 9)
0.050660592
>>> float(problem.boundary_value([[0.3, 0.0]])[0])
0.0
"""

import numpy as _numpy

from .. import diffnet as _diffnet
from . import laplace as _laplace


class Poisson (_laplace.Laplace):
    name = 'POISSON'

    def source(self, points):
        points = self.domain.as_points(points)
        return -_numpy.sin(_numpy.pi * points[:, 0]) * \
            _numpy.sin(_numpy.pi * points[:, 1])

    def exact_jet(self, points):
        points = self.domain.as_points(points)
        pi = _numpy.pi
        sx, sy = _numpy.sin(pi * points[:, 0]), _numpy.sin(pi * points[:, 1])
        cx, cy = _numpy.cos(pi * points[:, 0]), _numpy.cos(pi * points[:, 1])
        scale = 1.0 / (2 * pi**2)
        value = scale * sx * sy
        return _diffnet.Jet(
            value=value,
            grad=scale * pi * _numpy.column_stack([cx * sy, sx * cy]),
            hess=_numpy.column_stack([-pi**2 * value, -pi**2 * value]))
