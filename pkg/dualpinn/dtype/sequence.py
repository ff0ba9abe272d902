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

"""Comma-separated lists of numbers

>>> IntegerList.decode(property=None, value='48,48,48')
[48, 48, 48]
>>> FloatList.encode(property=None, value=[0.5, -1e-07])
'0.5,-1e-07'
"""

from . import base as _base
from . import numeric as _numeric


class _List (_base.DataType):
    item = None

    @classmethod
    def decode(cls, property, value):
        if not value.strip():
            return []
        return [cls.item.decode(property=property, value=v.strip())
                for v in value.split(',')]

    @classmethod
    def encode(cls, property, value):
        return ','.join(cls.item.encode(property=property, value=v)
                        for v in value)


class IntegerList (_List):
    name = 'INTEGER-LIST'
    item = _numeric.Integer


class FloatList (_List):
    name = 'FLOAT-LIST'
    item = _numeric.Float
