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

"""Integer, float and boolean values

Floats are written with ``repr`` so reading back what was written
reproduces the value bit for bit.

>>> Float.encode(property=None, value=0.1)
'0.1'
>>> Float.decode(property=None, value='1e-3')
0.001
>>> Boolean.decode(property=None, value='true')
True
"""

import math as _math

from . import base as _base


class Integer (_base.DataType):
    name = 'INTEGER'

    @classmethod
    def decode(cls, property, value):
        return int(value)

    @classmethod
    def encode(cls, property, value):
        return '{:d}'.format(value)


class Float (_base.DataType):
    name = 'FLOAT'

    @classmethod
    def decode(cls, property, value):
        value = float(value)
        if not _math.isfinite(value):
            raise ValueError('non-finite float {!r}'.format(value))
        return value

    @classmethod
    def encode(cls, property, value):
        return repr(float(value))


class Boolean (_base.DataType):
    name = 'BOOLEAN'

    @classmethod
    def decode(cls, property, value):
        value = value.upper()
        if value not in ('TRUE', 'FALSE'):
            raise ValueError('expected TRUE or FALSE, not {!r}'.format(value))
        return value == 'TRUE'

    @classmethod
    def encode(cls, property, value):
        if value:
            return 'TRUE'
        return 'FALSE'
