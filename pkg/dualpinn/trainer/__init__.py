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

"""Optimization, phase orchestration and checkpoints

>>> sorted(PROTOCOLS)
['ONE-PHASE', 'SEQUENTIAL-FP', 'TWO-PHASE']
"""

from .adam import AdamConfig, AdamState, adam_step
from .checkpoint import (
    load_checkpoint, read_checkpoint, save_checkpoint, write_checkpoint)
from .phase import (
    EarlyStopConfig, ObjectiveState, PhasePlan, TrainTrace, train_phase)
from .protocol import PROTOCOLS, run, run_protocol, run_sequential_fp
