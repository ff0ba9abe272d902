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

"""Sections of an experiment
"""

from . import base as _base


class ProblemSection (_base.Component):
    name = 'PROBLEM'
    required = [
        'NAME',
        ]
    optional = [
        # Fokker-Planck
        'DRIFT-A',
        'DRIFT-B',
        'SIGMA',
        'DX',
        # wave
        'WAVE-SPEED',
        ]


class Architecture (_base.Component):
    name = 'ARCHITECTURE'
    key = 'ROLE'
    required = [
        'ROLE',
        ]
    optional = [
        'LAYERS',
        'ACTIVATION',
        'OMEGA0',
        ]


class Sampling (_base.Component):
    name = 'SAMPLING'
    optional = [
        'BOUNDARY-POINTS',
        'INITIAL-POINTS',
        'RING-FRACTION',
        'RING-WIDTH',
        'RESIDUAL-FRACTION',
        'POOL-FACTOR',
        'PSEUDO-MEASUREMENTS',
        ]


class Alm (_base.Component):
    name = 'ALM'
    optional = [
        'RHO',
        'RHO-MAX',
        'ETA',
        'LAMBDA-MAX',
        'UPDATE-EVERY',
        'RAMP-EVERY',
        'RAMP-POLICY',
        'FIXED-PENALTY',
        'WEIGHT',
        ]
    multiple = [
        'WEIGHT',
        ]


class Prior (_base.Component):
    name = 'PRIOR'
    optional = [
        'TAU',
        'ALPHA-INT',
        'ALPHA-BD',
        'BOUNDARY-ENERGY',
        ]


class Schedule (_base.Component):
    name = 'SCHEDULE'
    optional = [
        'GAMMA-MIN',
        'GAMMA-MAX',
        'GAMMA-FIXED',
        'WBC-MIN',
        'WBC-MAX',
        'ANNEAL-PHASE1',
        ]


class Optimizer (_base.Component):
    name = 'OPTIMIZER'
    optional = [
        'LEARNING-RATE',
        'BETA1',
        'BETA2',
        'EPSILON',
        ]


class Phase (_base.Component):
    name = 'PHASE'
    key = 'NAME'
    required = [
        'NAME',
        ]
    optional = [
        'EPOCHS',
        'INTERIOR-POINTS',
        'SAMPLER',
        'RESAMPLE-EVERY',
        ]


class EarlyStop (_base.Component):
    name = 'EARLYSTOP'
    optional = [
        'PATIENCE',
        'MIN-DELTA',
        'RESTORE-BEST',
        ]


class Modal (_base.Component):
    name = 'MODAL'
    optional = [
        'WEIGHT',
        'MODES',
        'TIMES',
        'QUAD-POINTS',
        ]


class Evaluation (_base.Component):
    name = 'EVALUATION'
    optional = [
        'GRID',
        'BOUNDARY-GRID',
        'SLICE',
        'SLICE-POINTS',
        'VALIDATE-EVERY',
        'VALIDATION-POINTS',
        ]
