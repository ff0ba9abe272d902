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

r"""Free text and upper-case keywords

Text values run verbatim to the end of the line, so semicolons, commas,
colons and backslashes need no escaping.  Only a line break cannot be
written.

>>> Text.decode(property=None, value=r'C:\runs\new.cfg')
'C:\\runs\\new.cfg'
>>> Text.encode(property=None, value='runs/a;b,c.cfg')
'runs/a;b,c.cfg'
>>> Text.encode(property=None, value='two\nlines')
Traceback (most recent call last):
  ...
dualpinn.error.ConfigurationError: text values must fit on one line
"""

from .. import error as _error

from . import base as _base


class Text (_base.DataType):
    name = 'TEXT'

    @classmethod
    def decode(cls, property, value):
        return value

    @classmethod
    def encode(cls, property, value):
        if '\n' in value or '\r' in value:
            raise _error.ConfigurationError(
                'text values must fit on one line',
                line=getattr(property, 'line', None))
        return value


class Keyword (_base.DataType):
    """Case-insensitive keyword, stored upper case
    """
    name = 'KEYWORD'

    @classmethod
    def decode(cls, property, value):
        return value.strip().upper()

    @classmethod
    def encode(cls, property, value):
        return value
