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

"""Benchmark PDE problems

Problems register by name, the way the configuration layer refers to
them.

>>> sorted(PROBLEM)
['FOKKER-PLANCK', 'LAPLACE', 'POISSON', 'WAVE']
>>> get('poisson')
<dualpinn.problem.poisson.Poisson name:POISSON>
"""

from .. import error as _error

from . import base as _base

from . import fokker_planck as _fokker_planck
from . import laplace as _laplace
from . import poisson as _poisson
from . import wave as _wave


PROBLEM = _base._PROBLEM


def register(problem):
    """Register a problem class
    """
    PROBLEM[problem.name] = problem


def get(name, **kwargs):
    """Instantiate a registered problem
    """
    name = name.upper()
    if name not in PROBLEM:
        raise _error.ConfigurationError(
            'unknown problem {!r} (choose from {})'.format(
                name, ', '.join(sorted(PROBLEM))))
    return PROBLEM[name](**kwargs)


for module in [
        _fokker_planck,
        _laplace,
        _poisson,
        _wave,
        ]:
    for name in dir(module):
        if name.startswith('_'):
            continue
        obj = getattr(module, name)
        if isinstance(obj, type) and issubclass(obj, _base.Problem) and \
                obj.name:
            register(problem=obj)
del module, name, obj
