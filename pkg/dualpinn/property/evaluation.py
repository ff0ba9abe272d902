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

"""Evaluation grids and slices
"""

from . import base as _base


class Grid (_base.Property):
    """Nodes per axis of the test grid

    Absent means 256 (1-D) or 100 per axis.
    """
    name = 'GRID'
    dtypes = ['INTEGER-LIST']
    minimum = 2


class BoundaryGrid (_base.Property):
    """Boundary nodes per edge or spatial face

    Absent means 1000 per edge (rectangles) or 500 per face
    (space-time).
    """
    name = 'BOUNDARY-GRID'
    dtypes = ['INTEGER']
    minimum = 2


class Slice (_base.Property):
    """Fixed coordinate of the slice table (y for 2-D, t for space-time)
    """
    name = 'SLICE'
    dtypes = ['FLOAT']


class SlicePoints (_base.Property):
    name = 'SLICE-POINTS'
    dtypes = ['INTEGER']
    default = 512
    minimum = 2


class ValidateEvery (_base.Property):
    # 0 disables the validation column of the trace
    name = 'VALIDATE-EVERY'
    dtypes = ['INTEGER']
    default = 100
    minimum = 0


class ValidationPoints (_base.Property):
    # per axis
    name = 'VALIDATION-POINTS'
    dtypes = ['INTEGER']
    default = 32
    minimum = 2
