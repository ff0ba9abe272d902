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

"""Exceptions raised throughout dualpinn

>>> error = ConfigurationError('unknown key FOO', line=12)
>>> print(error)
line 12: unknown key FOO
>>> isinstance(error, ValueError)
True
"""


class ConfigurationError (ValueError):
    """An experiment or object was configured with invalid settings
    """
    def __init__(self, message, line=None, path=None):
        super(ConfigurationError, self).__init__(message)
        self.message = message
        self.line = line
        self.path = path

    def __str__(self):
        prefix = []
        if self.path:
            prefix.append(str(self.path))
        if self.line is not None:
            prefix.append('line {}'.format(self.line))
        if prefix:
            return '{}: {}'.format(', '.join(prefix), self.message)
        return self.message


class ContractViolation (ValueError):
    """A caller broke the precondition of an operation
    """


class TrainingAborted (RuntimeError):
    """Training produced a non-finite loss part or gradient

    ``part`` names the offending loss term (or ``'gradient'``),
    ``epoch`` is the phase-local epoch and ``nets`` holds the last
    parameters that produced a finite loss.
    """
    def __init__(self, part, epoch=None, nets=None, phase=None):
        message = 'non-finite {}'.format(part)
        if phase is not None:
            message = '{} in phase {}'.format(message, phase)
        if epoch is not None:
            message = '{} at epoch {}'.format(message, epoch)
        super(TrainingAborted, self).__init__(message)
        self.part = part
        self.epoch = epoch
        self.nets = nets
        self.phase = phase
        self.trace = None
