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

"""Subnetwork architecture and stored parameters
"""

from . import base as _base


class Role (_base.Property):
    name = 'ROLE'
    dtypes = ['KEYWORD']
    choices = ['DOMAIN', 'BOUNDARY']


class Layers (_base.Property):
    """Hidden-layer widths, e.g. ``LAYERS:48,48,48,48,48,48``
    """
    name = 'LAYERS'
    dtypes = ['INTEGER-LIST']
    minimum = 1


class Activation (_base.Property):
    name = 'ACTIVATION'
    dtypes = ['KEYWORD']
    default = 'TANH'
    choices = ['TANH', 'SINE', 'LINEAR']


class Omega0 (_base.Property):
    name = 'OMEGA0'
    dtypes = ['FLOAT']
    default = 30.0
    positive = True


class Shape (_base.Property):
    name = 'SHAPE'
    dtypes = ['INTEGER-LIST']
    minimum = 1


class Weights (_base.Property):
    # row-major
    name = 'WEIGHTS'
    dtypes = ['FLOAT-LIST']


class Biases (_base.Property):
    name = 'BIASES'
    dtypes = ['FLOAT-LIST']
