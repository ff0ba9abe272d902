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

"""Run-level keys and problem coefficients
"""

from . import base as _base


class Name (_base.Property):
    # problem name in PROBLEM, phase name in PHASE
    name = 'NAME'
    dtypes = ['KEYWORD']


class Seed (_base.Property):
    name = 'SEED'
    dtypes = ['INTEGER']
    default = 0
    minimum = 0


class EpochScale (_base.Property):
    """Multiplies every phase's epoch budget (rounded, at least 1)
    """
    name = 'EPOCH-SCALE'
    dtypes = ['FLOAT']
    default = 1.0
    positive = True


class Networks (_base.Property):
    name = 'NETWORKS'
    dtypes = ['INTEGER']
    default = 2
    choices = [1, 2]


class Protocol (_base.Property):
    name = 'PROTOCOL'
    dtypes = ['KEYWORD']
    default = 'TWO-PHASE'
    choices = ['ONE-PHASE', 'TWO-PHASE', 'SEQUENTIAL-FP']


class DriftA (_base.Property):
    name = 'DRIFT-A'
    dtypes = ['FLOAT']
    default = 0.3


class DriftB (_base.Property):
    name = 'DRIFT-B'
    dtypes = ['FLOAT']
    default = 0.5


class Sigma (_base.Property):
    name = 'SIGMA'
    dtypes = ['FLOAT']
    default = 0.5
    positive = True


class GridSpacing (_base.Property):
    name = 'DX'
    dtypes = ['FLOAT']
    default = 0.01
    positive = True


class WaveSpeed (_base.Property):
    name = 'WAVE-SPEED'
    dtypes = ['FLOAT']
    default = 2.0
    positive = True
