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

"""Checkpoint bookkeeping keys

The stored arrays reuse the network keys (``SHAPE``, ``WEIGHTS``,
``BIASES``) and the ALM ``RHO``.
"""

from . import base as _base


class FormatVersion (_base.Property):
    name = 'FORMAT-VERSION'
    dtypes = ['INTEGER']
    choices = [1]


class Epoch (_base.Property):
    name = 'EPOCH'
    dtypes = ['INTEGER']
    minimum = 0


class ConstraintSet (_base.Property):
    name = 'SET'
    dtypes = ['KEYWORD']


class Lambdas (_base.Property):
    name = 'LAMBDAS'
    dtypes = ['FLOAT-LIST']
