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

from . import base as _base


class Experiment (_base.Component):
    """One training experiment (a run, or a sweep over seeds)

    Sections left out fall back to the documented key defaults; a
    missing ``EARLYSTOP`` or ``MODAL`` section switches that feature
    off.
    """
    name = 'EXPERIMENT'
    optional = [
        'EXTENDS',
        'SEED',
        'EPOCH-SCALE',
        'NETWORKS',
        'PROTOCOL',
        ]
    subcomponents = [
        'PROBLEM',
        'ARCHITECTURE',
        'SAMPLING',
        'ALM',
        'PRIOR',
        'SCHEDULE',
        'OPTIMIZER',
        'PHASE',
        'EARLYSTOP',
        'MODAL',
        'EVALUATION',
        ]

    def section(self, name, key=None):
        """A subsection, or an empty one holding only defaults
        """
        component = self.component(name, key=key)
        if component is None:
            component = _base._COMPONENT[name]()
        return component

    def has_section(self, name):
        return bool(self.get(name))
