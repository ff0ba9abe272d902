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

import io as _io
import itertools as _itertools

from .. import error as _error
from .. import property as _property
from .. import unfold as _unfold


_COMPONENT = {}


class Component (dict):
    r"""A ``BEGIN:NAME`` ... ``END:NAME`` section

    Keys land in the dict under their names (lists for ``multiple``
    keys); subsections are always stored as lists.  ``key`` names the
    property that tells repeated subsections apart (``ROLE`` for
    architectures, ``NAME`` for phases).
    """
    name = None
    # properties
    required = []
    optional = []
    multiple = []
    # sub components
    subcomponents = []
    key = None

    def __init__(self, line=None):
        super(Component, self).__init__()
        self.line = line

    def __hash__(self):
        return id(self)

    def __str__(self):
        with _io.StringIO() as stream:
            self.write(stream=stream, newline='\n')
            return stream.getvalue()[:-1]  # strip the trailing newline

    def __repr__(self):
        if self.key and self.key in self:
            return '<{}.{} name:{} {}:{}>'.format(
                self.__module__, type(self).__name__, self.name, self.key,
                self[self.key].value)
        return '<{}.{} name:{} at {:#x}>'.format(
            self.__module__, type(self).__name__, self.name, id(self))

    def read(self, stream=None, lines=None):
        """Read an input stream and parse into properties and subcomponents
        """
        if lines is None:
            lines = _unfold.unfold(stream=stream)
        elif stream is not None:
            raise ValueError("cannot specify both 'stream' and 'lines'")
        for number, line in lines:
            prop = _property.parse(line, number=number)
            if prop.name == 'BEGIN':  # a subcomponent
                if prop.value not in self.subcomponents:
                    raise _error.ConfigurationError(
                        'invalid section {} in {}'.format(
                            prop.value, self.name), line=number)
                component_class = _COMPONENT[prop.value]
                component = component_class(line=number)
                component.read(lines=lines)
                self.add_component(component)
            elif prop.name == 'END':  # we're done with this component
                if prop.value != self.name:
                    raise _error.ConfigurationError(
                        'cannot close {} with {}'.format(self.name, line),
                        line=number)
                self.check()
                return
            else:  # a property
                self.add_property(property=prop)
        raise _error.ConfigurationError(
            'section {} is never closed'.format(self.name), line=self.line)

    def check(self):
        for name in self.required:
            if name not in self:
                raise _error.ConfigurationError(
                    '{} section lacks required key {}'.format(
                        self.name, name), line=self.line)

    def add_component(self, component):
        name = component.name
        if name not in self.subcomponents:
            raise _error.ConfigurationError(
                'invalid section {} in {}'.format(name, self.name),
                line=component.line)
        if name not in self:
            self[name] = []
        if component.key:
            key = component.value(component.key)
            for other in self[name]:
                if other.value(other.key) == key:
                    raise _error.ConfigurationError(
                        'duplicate {} section with {} {}'.format(
                            name, component.key, key), line=component.line)
        elif self[name]:
            raise _error.ConfigurationError(
                'duplicate {} section'.format(name), line=component.line)
        self[name].append(component)

    def add_property(self, property):
        name = property.name
        if name not in self.required and name not in self.optional:
            raise _error.ConfigurationError(
                'invalid key {} in {} section'.format(name, self.name),
                line=property.line)
        if name in self.multiple:
            if name not in self:
                self[name] = []
            self[name].append(property)
        else:
            if name in self:
                raise _error.ConfigurationError(
                    'duplicate key {} in {} section'.format(name, self.name),
                    line=property.line)
            self[name] = property

    def set(self, name, value, parameters=None):
        """Add or replace a key by value
        """
        prop = _property.PROPERTY[name](parameters=parameters, value=value)
        prop.check_parameters()
        prop.check_value()
        if name in self.multiple:
            entries = [p for p in self.get(name, [])
                       if dict(p.items()) != dict(prop.items())]
            self[name] = entries + [prop]
        else:
            self.pop(name, None)
            self.add_property(property=prop)
        return prop

    def value(self, name, parameters=None):
        """The value of a key, or its documented default
        """
        if name not in self.required and name not in self.optional:
            raise KeyError('{} is not a {} key'.format(name, self.name))
        prop = self.get(name)
        if isinstance(prop, list):
            wanted = dict(parameters or {})
            matches = [p for p in prop if dict(p.items()) == wanted]
            prop = matches[-1] if matches else None
        if prop is None:
            return _property.default(name)
        return prop.value

    def components(self, name):
        return list(self.get(name, []))

    def component(self, name, key=None):
        """The single subsection ``name`` (or the one whose key is ``key``)
        """
        for component in self.get(name, []):
            if key is None or component.value(component.key) == key:
                return component
        return None

    def copy(self):
        other = type(self)(line=self.line)
        for name, value in self.items():
            if name in self.subcomponents:
                other[name] = [c.copy() for c in value]
            elif isinstance(value, list):
                other[name] = [p.copy() for p in value]
            else:
                other[name] = value.copy()
        return other

    def write(self, stream, newline='\n'):
        stream.write('BEGIN:{}{}'.format(self.name, newline))
        for prop in _itertools.chain(self.required, self.optional):
            self._write_property_by_name(
                name=prop, stream=stream, newline=newline)
        for component in self.subcomponents:
            self._write_component_by_name(
                name=component, stream=stream, newline=newline)
        stream.write('END:{}{}'.format(self.name, newline))

    def _write_component_by_name(self, name, stream, newline='\n'):
        component = self.get(name, [])
        if isinstance(component, list):
            for c in component:
                c.write(stream=stream, newline=newline)
        else:
            component.write(stream=stream, newline=newline)

    def _write_property_by_name(self, name, stream, newline='\n'):
        prop = self.get(name, [])
        if isinstance(prop, list):
            for p in prop:
                p.write(stream=stream, newline=newline)
        else:
            prop.write(stream=stream, newline=newline)
