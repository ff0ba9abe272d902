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

"""Keys of the experiment and checkpoint formats

A key line reads ``NAME;PARAM=VALUE:VALUE``.

>>> prop = parse('WEIGHT;SET=INITIAL:2.5', number=7)
>>> prop.name, prop['SET'], prop.value, prop.line
('WEIGHT', 'INITIAL', 2.5, 7)
>>> print(prop)
WEIGHT;SET=INITIAL:2.5
>>> parse('LAYRES:48,48', number=3)
Traceback (most recent call last):
  ...
dualpinn.error.ConfigurationError: line 3: unknown key LAYRES
"""

from .. import error as _error

from . import base as _base

from . import checkpoint as _checkpoint
from . import evaluation as _evaluation
from . import experiment as _experiment
from . import network as _network
from . import structure as _structure
from . import training as _training


PROPERTY = {}


def register(property):
    """Register a property class
    """
    PROPERTY[property.name] = property


def parse(line, number=None):
    if ':' not in line:
        raise _error.ConfigurationError(
            'expected NAME:VALUE, not {!r}'.format(line), line=number)
    name_param, value = [x.strip() for x in line.split(':', 1)]
    parameters = name_param.split(';')
    name = parameters.pop(0).upper()  # names are case insensitive
    for parameter in parameters:
        if '=' not in parameter:
            raise _error.ConfigurationError(
                'parameter {!r} of {} lacks a value'.format(parameter, name),
                line=number)
    parameters = dict(
        (k.upper(), v) for k, v in (x.split('=', 1) for x in parameters))
    if name not in PROPERTY:
        raise _error.ConfigurationError(
            'unknown key {}'.format(name), line=number)
    prop_class = PROPERTY[name]
    prop = prop_class(parameters=parameters, line=number)
    prop.check_parameters()
    prop.value = prop.decode(value=value)
    prop.check_value()
    return prop


def default(name):
    """Documented default of a key (``None`` when it has none)
    """
    return _base._copy_value(PROPERTY[name].default)


for module in [
        _checkpoint,
        _evaluation,
        _experiment,
        _network,
        _structure,
        _training,
        ]:
    for name in dir(module):
        if name.startswith('_'):
            continue
        obj = getattr(module, name)
        if isinstance(obj, type) and issubclass(obj, _base.Property):
            register(property=obj)
del module, name, obj
