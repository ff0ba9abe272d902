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

"""Sampling, constraint, prior, schedule, optimizer and phase keys
"""

from . import base as _base


class BoundaryPoints (_base.Property):
    # per edge (rectangles) or per spatial face (space-time)
    name = 'BOUNDARY-POINTS'
    dtypes = ['INTEGER']
    default = 300
    minimum = 1


class InitialPoints (_base.Property):
    name = 'INITIAL-POINTS'
    dtypes = ['INTEGER']
    default = 300
    minimum = 1


class RingFraction (_base.Property):
    name = 'RING-FRACTION'
    dtypes = ['FLOAT']
    default = 0.5
    minimum = 0.0
    maximum = 1.0


class RingWidth (_base.Property):
    """Ring width δ; absent means ``min(0.1 diameter, 0.5 inradius)``
    """
    name = 'RING-WIDTH'
    dtypes = ['FLOAT']
    positive = True


class ResidualFraction (_base.Property):
    name = 'RESIDUAL-FRACTION'
    dtypes = ['FLOAT']
    default = 0.0
    minimum = 0.0
    maximum = 1.0


class PoolFactor (_base.Property):
    name = 'POOL-FACTOR'
    dtypes = ['INTEGER']
    default = 4
    minimum = 1


class PseudoMeasurements (_base.Property):
    name = 'PSEUDO-MEASUREMENTS'
    dtypes = ['INTEGER']
    default = 200
    minimum = 1


class Rho (_base.Property):
    name = 'RHO'
    dtypes = ['FLOAT']
    default = 1.0
    positive = True


class RhoMax (_base.Property):
    name = 'RHO-MAX'
    dtypes = ['FLOAT']
    default = 100.0
    positive = True


class Eta (_base.Property):
    name = 'ETA'
    dtypes = ['FLOAT']
    default = 2.0
    minimum = 1.0


class LambdaMax (_base.Property):
    name = 'LAMBDA-MAX'
    dtypes = ['FLOAT']
    default = 100.0
    positive = True


class UpdateEvery (_base.Property):
    name = 'UPDATE-EVERY'
    dtypes = ['INTEGER']
    default = 50
    minimum = 1


class RampEvery (_base.Property):
    name = 'RAMP-EVERY'
    dtypes = ['INTEGER']
    default = 500
    minimum = 1


class RampPolicy (_base.Property):
    name = 'RAMP-POLICY'
    dtypes = ['KEYWORD']
    default = 'SCHEDULED'
    choices = ['SCHEDULED', 'PLATEAU', 'OFF']


class FixedPenalty (_base.Property):
    """Freeze the multipliers at zero and keep ρ constant
    """
    name = 'FIXED-PENALTY'
    dtypes = ['BOOLEAN']
    default = False


class Weight (_base.Property):
    """Loss weight; in ALM sections ``WEIGHT;SET=INITIAL:2.0`` scales one set
    """
    name = 'WEIGHT'
    parameters = ['SET']
    dtypes = ['FLOAT']
    default = 1.0
    minimum = 0.0


class Tau (_base.Property):
    """Role decay length; absent means a tenth of the domain diameter
    """
    name = 'TAU'
    dtypes = ['FLOAT']
    positive = True


class AlphaInt (_base.Property):
    name = 'ALPHA-INT'
    dtypes = ['FLOAT']
    default = 1.0
    minimum = 0.0


class AlphaBd (_base.Property):
    name = 'ALPHA-BD'
    dtypes = ['FLOAT']
    default = 1.0
    minimum = 0.0


class BoundaryEnergy (_base.Property):
    name = 'BOUNDARY-ENERGY'
    dtypes = ['FLOAT']
    default = 0.0
    minimum = 0.0


class GammaMin (_base.Property):
    name = 'GAMMA-MIN'
    dtypes = ['FLOAT']
    default = 0.01
    minimum = 0.0


class GammaMax (_base.Property):
    name = 'GAMMA-MAX'
    dtypes = ['FLOAT']
    default = 1.0
    minimum = 0.0


class GammaFixed (_base.Property):
    """Hold γ at this value in every phase
    """
    name = 'GAMMA-FIXED'
    dtypes = ['FLOAT']
    minimum = 0.0


class WbcMin (_base.Property):
    name = 'WBC-MIN'
    dtypes = ['FLOAT']
    default = 1.0
    minimum = 0.0


class WbcMax (_base.Property):
    name = 'WBC-MAX'
    dtypes = ['FLOAT']
    default = 10.0
    minimum = 0.0


class AnnealPhase1 (_base.Property):
    name = 'ANNEAL-PHASE1'
    dtypes = ['BOOLEAN']
    default = False


class LearningRate (_base.Property):
    name = 'LEARNING-RATE'
    dtypes = ['FLOAT']
    default = 1e-3
    positive = True


class Beta1 (_base.Property):
    name = 'BETA1'
    dtypes = ['FLOAT']
    default = 0.9
    minimum = 0.0
    maximum = 0.999999


class Beta2 (_base.Property):
    name = 'BETA2'
    dtypes = ['FLOAT']
    default = 0.999
    minimum = 0.0
    maximum = 0.999999


class Epsilon (_base.Property):
    name = 'EPSILON'
    dtypes = ['FLOAT']
    default = 1e-8
    positive = True


class Epochs (_base.Property):
    name = 'EPOCHS'
    dtypes = ['INTEGER']
    default = 0
    minimum = 0


class InteriorPoints (_base.Property):
    name = 'INTERIOR-POINTS'
    dtypes = ['INTEGER']
    default = 7000
    minimum = 1


class Sampler (_base.Property):
    name = 'SAMPLER'
    dtypes = ['KEYWORD']
    default = 'UNIFORM'
    choices = ['UNIFORM', 'RING-MIX', 'BOUNDARY-ONLY', 'GRID']


class ResampleEvery (_base.Property):
    # 0 keeps the first draw for the whole phase
    name = 'RESAMPLE-EVERY'
    dtypes = ['INTEGER']
    default = 1
    minimum = 0


class Patience (_base.Property):
    name = 'PATIENCE'
    dtypes = ['INTEGER']
    default = 200
    minimum = 1


class MinDelta (_base.Property):
    name = 'MIN-DELTA'
    dtypes = ['FLOAT']
    default = 1e-6
    minimum = 0.0


class RestoreBest (_base.Property):
    name = 'RESTORE-BEST'
    dtypes = ['BOOLEAN']
    default = True


class Modes (_base.Property):
    name = 'MODES'
    dtypes = ['INTEGER-LIST']
    default = [1, 4]
    minimum = 1


class Times (_base.Property):
    # sampled times per epoch
    name = 'TIMES'
    dtypes = ['INTEGER']
    default = 16
    minimum = 1


class QuadPoints (_base.Property):
    name = 'QUAD-POINTS'
    dtypes = ['INTEGER']
    default = 128
    minimum = 16
