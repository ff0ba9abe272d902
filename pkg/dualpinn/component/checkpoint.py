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

"""Saved network parameters and multiplier state

::

  BEGIN:CHECKPOINT
  FORMAT-VERSION:1
  EPOCH:2000
  BEGIN:NETWORK
  ROLE:DOMAIN
  BEGIN:LAYER
  ACTIVATION:TANH
  SHAPE:48,2
  WEIGHTS:...
  BIASES:...
  END:LAYER
  ...
  END:NETWORK
  BEGIN:ALM-STATE
  SET:BOUNDARY
  RHO:4.0
  LAMBDAS:...
  END:ALM-STATE
  END:CHECKPOINT
"""

from . import base as _base


class Checkpoint (_base.Component):
    name = 'CHECKPOINT'
    required = [
        'FORMAT-VERSION',
        'EPOCH',
        ]
    subcomponents = [
        'NETWORK',
        'ALM-STATE',
        ]


class Network (_base.Component):
    name = 'NETWORK'
    key = 'ROLE'
    required = [
        'ROLE',
        ]
    subcomponents = [
        'LAYER',
        ]

    def add_component(self, component):
        # layers repeat in order and carry no key
        if component.name != 'LAYER':
            super(Network, self).add_component(component)
            return
        self.setdefault('LAYER', []).append(component)


class LayerSection (_base.Component):
    name = 'LAYER'
    required = [
        'ACTIVATION',
        'SHAPE',
        'WEIGHTS',
        'BIASES',
        ]
    optional = [
        'OMEGA0',
        ]


class AlmStateSection (_base.Component):
    name = 'ALM-STATE'
    key = 'SET'
    required = [
        'SET',
        'RHO',
        'LAMBDAS',
        ]
