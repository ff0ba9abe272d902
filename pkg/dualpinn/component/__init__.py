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

r"""Sections of the experiment and checkpoint formats

Usage
-----

>>> import io
>>> experiment = parse(stream=io.StringIO('\n'.join([
...     'BEGIN:EXPERIMENT',
...     'SEED:40',
...     'BEGIN:PROBLEM',
...     'NAME:laplace',
...     'END:PROBLEM',
...     'BEGIN:PHASE',
...     'NAME:PHASE1',
...     'EPOCHS:2000',
...     'END:PHASE',
...     'END:EXPERIMENT',
...     ''])))
>>> experiment.value('SEED'), experiment.value('NETWORKS')
(40, 2)
>>> experiment.section('PROBLEM').value('NAME')
'LAPLACE'
>>> experiment.section('PHASE', key='PHASE1').value('EPOCHS')
2000
>>> experiment.section('ALM').value('UPDATE-EVERY')
50
>>> print(experiment)
BEGIN:EXPERIMENT
SEED:40
BEGIN:PROBLEM
NAME:LAPLACE
END:PROBLEM
BEGIN:PHASE
NAME:PHASE1
EPOCHS:2000
END:PHASE
END:EXPERIMENT

Unknown keys are reported with their line.

>>> parse(stream=io.StringIO('BEGIN:EXPERIMENT\nBEGIN:ALM\nRHOO:2\n'))
Traceback (most recent call last):
  ...
dualpinn.error.ConfigurationError: line 3: unknown key RHOO
"""

from .. import error as _error
from .. import property as _property
from .. import unfold as _unfold

from . import base as _base

from . import checkpoint as _checkpoint
from . import experiment as _experiment
from . import sections as _sections


COMPONENT = _base._COMPONENT


def register(component):
    """Register a component class
    """
    COMPONENT[component.name] = component


def parse(stream, path=None):
    """Load a single component from a stream
    """
    try:
        lines = _unfold.unfold(stream=stream)
        try:
            number, line = next(lines)
        except StopIteration:
            raise _error.ConfigurationError('empty file')
        prop = _property.parse(line=line, number=number)
        if prop.name != 'BEGIN' or prop.value not in COMPONENT:
            raise _error.ConfigurationError(
                "must start with 'BEGIN:<section>', not {!r}".format(line),
                line=number)
        component_class = COMPONENT[prop.value]
        component = component_class(line=number)
        component.read(lines=lines)
    except _error.ConfigurationError as e:
        if e.path is None:
            e.path = path
        raise
    return component


for module in [
        _checkpoint,
        _experiment,
        _sections,
        ]:
    for name in dir(module):
        if name.startswith('_'):
            continue
        obj = getattr(module, name)
        if isinstance(obj, type) and issubclass(obj, _base.Component):
            register(component=obj)
del module, name, obj
