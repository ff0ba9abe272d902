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

from .. import dtype as _dtype
from .. import error as _error


class Property (dict):
    """A ``NAME;PARAM=VALUE:VALUE`` content line

    The dict holds the line's parameters.  ``default`` documents the
    value a section uses when the key is absent; ``choices``,
    ``minimum`` and ``maximum`` restrict the accepted values (applied
    to every item of list values) and ``positive`` rejects zero.
    """
    name = None
    parameters = []
    dtypes = []
    default = None
    choices = None
    minimum = None
    maximum = None
    positive = False

    def __init__(self, parameters=None, value=None, line=None):
        if not parameters:
            parameters = {}
        super(Property, self).__init__()
        self.update(parameters)
        self.value = value
        self.line = line

    def __hash__(self):
        return id(self)

    def __str__(self):
        with _io.StringIO() as stream:
            self.write(stream=stream, newline='\n')
            return stream.getvalue()[:-1]  # strip the trailing newline

    def __repr__(self):
        return '<{}.{} name:{} at {:#x}>'.format(
            self.__module__, type(self).__name__, self.name, id(self))

    def copy(self):
        return type(self)(
            parameters=dict(self.items()), value=_copy_value(self.value),
            line=self.line)

    def decode(self, value):
        dtype = self._get_dtype()
        try:
            return dtype.decode(property=self, value=value)
        except _error.ConfigurationError:
            raise
        except ValueError as e:
            raise _error.ConfigurationError(
                'invalid {} value {!r}: {}'.format(self.name, value, e),
                line=self.line)

    def encode(self, value):
        dtype = self._get_dtype()
        return dtype.encode(property=self, value=value)

    def _get_dtype(self, dtype=None):
        if not dtype:
            if not self.dtypes:
                raise NotImplementedError('no default types for {!r}'.format(
                    self))
            dtype = self.get('VALUE', self.dtypes[0])
        if dtype not in self.dtypes:
            raise _error.ConfigurationError(
                'invalid type {} for {}'.format(dtype, self.name),
                line=self.line)
        return _dtype.DTYPE[dtype]

    def check_parameters(self):
        for parameter in self.keys():
            if parameter not in self.parameters:
                raise _error.ConfigurationError(
                    'invalid parameter {} for {}'.format(
                        parameter, self.name), line=self.line)

    def check_value(self):
        values = self.value
        if not isinstance(values, list):
            values = [values]
        for value in values:
            if self.choices is not None and value not in self.choices:
                raise _error.ConfigurationError(
                    'invalid {} value {!r} (choose from {})'.format(
                        self.name, value,
                        ', '.join(str(c) for c in self.choices)),
                    line=self.line)
            if self.minimum is not None and value < self.minimum:
                raise _error.ConfigurationError(
                    '{} must be >= {}, not {!r}'.format(
                        self.name, self.minimum, value), line=self.line)
            if self.maximum is not None and value > self.maximum:
                raise _error.ConfigurationError(
                    '{} must be <= {}, not {!r}'.format(
                        self.name, self.maximum, value), line=self.line)
            if self.positive and not value > 0:
                raise _error.ConfigurationError(
                    '{} must be positive, not {!r}'.format(
                        self.name, value), line=self.line)

    def write(self, stream, newline='\n', width=75):
        name_param = self.name
        line = '{}:{}'.format(
            ';'.join(_itertools.chain(
                [name_param],
                ['{}={}'.format(key, value)
                 for key, value in sorted(self.items())])),
            self.encode(self.value))
        lines = []
        if width:
            while len(line) > width:
                front = line[0:width]
                line = line[width:]
                if not lines:
                    width -= 1  # make room for the indent space
                else:
                    front = ' {}'.format(front)  # add the indent space
                lines.append(front)
            if lines:  # indent the last line
                line = ' {}'.format(line)
        lines.append(line)
        for line in lines:
            stream.write('{}{}'.format(line, newline))


def _copy_value(value):
    if isinstance(value, list):
        return list(value)
    return value
