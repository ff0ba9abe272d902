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

"""Section delimiters and preset inheritance

``BEGIN`` and ``END`` aren't really keys, but the section parsing
logic is simpler if we pretend that they are.
"""

from . import base as _base


class BeginComponent (_base.Property):
    name = 'BEGIN'
    dtypes = ['KEYWORD']


class EndComponent (_base.Property):
    name = 'END'
    dtypes = ['KEYWORD']


class Extends (_base.Property):
    """Parent preset, relative to the including file or packaged
    """
    name = 'EXTENDS'
    dtypes = ['TEXT']
