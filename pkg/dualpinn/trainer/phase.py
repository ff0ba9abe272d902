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

"""One training phase: sampling, loss assembly, Adam and ALM bookkeeping

Networks travel as a dict keyed by role (``'domain'`` and, for dual
runs, ``'boundary'``).  Each epoch draws its collocation points from
its own substream, evaluates every active loss part, backpropagates the
summed cotangents into the trainable networks and then applies the
scheduled multiplier and penalty updates.
"""

import functools as _functools
import logging as _logging
import time as _time

import numpy as _numpy

from .. import diffnet as _diffnet
from .. import error as _error
from .. import geometry as _geometry
from .. import objective as _objective
from .. import seeding as _seeding
from ..problem import fokker_planck as _fokker_planck
from . import adam as _adam


_LOG = _logging.getLogger(__name__)

ROLES = ('domain', 'boundary')

PHASES = ('WARMUP', 'PHASE1', 'PHASE2', 'FPDATA', 'FPRESIDUAL', 'FPJOINT')

SAMPLERS = ('uniform', 'ring_mix', 'boundary_only', 'grid')

LOSSES = ('physics', 'alm', 'role', 'warmup', 'modal', 'normalization',
          'data', 'baseline-data', 'pinning')

RAMP_POLICIES = ('scheduled', 'plateau', 'off')

TRACE_COLUMNS = [
    'phase',
    'epoch',
    'total',
    'physics',
    'alm',
    'role',
    'modal',
    'normalization',
    'data',
    'pinning',
    'warmup',
    'gamma',
    'w_bc',
    'rho',
    'lambda_inf',
    'validation_rel_l2',
    'wall_clock_s',
    ]


class EarlyStopConfig (object):
    """Stop after ``patience`` epochs without a ``min_delta`` improvement
    """
    monitors = ('total_loss',)

    def __init__(self, patience=200, min_delta=1e-6, restore_best=True,
                 monitor='total_loss'):
        if patience < 1:
            raise _error.ConfigurationError(
                'patience must be >= 1, not {}'.format(patience))
        if monitor not in self.monitors:
            raise _error.ConfigurationError(
                'cannot monitor {!r}'.format(monitor))
        self.patience = int(patience)
        self.min_delta = float(min_delta)
        self.restore_best = bool(restore_best)
        self.monitor = monitor


class PhasePlan (object):
    """What one phase trains, on which points, with which losses

    ``losses`` maps loss names to weights.  ``gamma`` and ``w_bc`` are
    GammaSchedules evaluated at the phase-local epoch; a schedule with
    ``T = 0`` is constant.
    """
    def __init__(self, name, epochs, sampler='uniform',
                 trainable=ROLES, losses=None, n_interior=7000,
                 resample_every=1, gamma=None, w_bc=None,
                 ramp_policy='scheduled', early_stop=None):
        if name not in PHASES:
            raise _error.ConfigurationError(
                'unknown phase {!r}'.format(name))
        if epochs < 0:
            raise _error.ConfigurationError(
                'phase {} has negative epochs {}'.format(name, epochs))
        if sampler not in SAMPLERS:
            raise _error.ConfigurationError(
                'unknown sampler {!r}'.format(sampler))
        if ramp_policy not in RAMP_POLICIES:
            raise _error.ConfigurationError(
                'unknown ramp policy {!r}'.format(ramp_policy))
        trainable = tuple(trainable)
        for role in trainable:
            if role not in ROLES:
                raise _error.ConfigurationError(
                    'unknown network role {!r}'.format(role))
        if epochs and not trainable:
            raise _error.ConfigurationError(
                'phase {} trains nothing'.format(name))
        if losses is None:
            losses = {'physics': 1.0, 'alm': 1.0}
        for loss in losses:
            if loss not in LOSSES:
                raise _error.ConfigurationError(
                    'unknown loss {!r}'.format(loss))
        if resample_every < 0:
            raise _error.ConfigurationError(
                'resample_every must be >= 0, not {}'.format(resample_every))
        if gamma is None:
            gamma = _objective.GammaSchedule.constant(1.0)
        if w_bc is None:
            w_bc = _objective.GammaSchedule.constant(1.0)
        self.name = name
        self.epochs = int(epochs)
        self.sampler = sampler
        self.trainable = trainable
        self.losses = dict(losses)
        self.n_interior = int(n_interior)
        self.resample_every = int(resample_every)
        self.gamma = gamma
        self.w_bc = w_bc
        self.ramp_policy = ramp_policy
        self.early_stop = early_stop

    def __repr__(self):
        return '<{}.{} {} epochs:{} sampler:{}>'.format(
            self.__module__, type(self).__name__, self.name, self.epochs,
            self.sampler)

    def needs_interior(self):
        return any(loss in self.losses for loss in ('physics', 'role'))


class ObjectiveState (object):
    """Phase-independent training state

    Holds the constraint sets with their ALM states, the role prior,
    sampling settings, the fixed data sets of the sequential protocol
    and the Adam moments of every network.
    """
    def __init__(self, problem, seed, constraints, alm, role=None,
                 fixed_penalty=False, constraint_weights=None,
                 plateau_delta=1e-6, adam=None, ring_width=None,
                 ring_fraction=0.5, residual_fraction=0.0, pool_factor=4,
                 modal=None, data=None, pin_points=None,
                 validation_points=None, validate_every=0):
        self.problem = problem
        self.seed = int(seed)
        self.constraints = list(constraints)
        self.alm = dict(alm)
        for constraint in self.constraints:
            if constraint.name not in self.alm or \
                    len(self.alm[constraint.name]) != len(constraint):
                raise _error.ContractViolation(
                    'no aligned ALM state for {!r}'.format(constraint))
        self.role = role
        self.fixed_penalty = bool(fixed_penalty)
        self.constraint_weights = dict(constraint_weights or {})
        self.plateau_delta = float(plateau_delta)
        if adam is None:
            adam = _adam.AdamConfig()
        self.adam = adam
        self.adam_states = {}
        if ring_width is None:
            ring_width = _geometry.default_delta(problem.domain)
        self.ring_width = float(ring_width)
        self.ring_fraction = float(ring_fraction)
        self.residual_fraction = float(residual_fraction)
        self.pool_factor = int(pool_factor)
        self.modal = modal
        self.data = data
        self.pin_points = pin_points
        self.validation_points = validation_points
        self.validate_every = int(validate_every)

    def set_constraints(self, constraints):
        """Swap in new constraint points

        Multipliers of a set whose points changed restart at zero.
        """
        old = dict((c.name, c) for c in self.constraints)
        for constraint in constraints:
            previous = old.get(constraint.name)
            state = self.alm[constraint.name]
            if previous is None or previous.points.shape != \
                    constraint.points.shape or not _numpy.array_equal(
                        previous.points, constraint.points):
                if state.lambda_norm():
                    _LOG.warning(
                        '{} constraint points changed, multipliers restart '
                        'at zero'.format(constraint.name))
                self.alm[constraint.name] = state.replace(
                    lambdas=_numpy.zeros(len(constraint)))
        self.constraints = list(constraints)

    def constraint(self, name):
        for constraint in self.constraints:
            if constraint.name == name:
                return constraint
        return None


class ModalSettings (object):
    def __init__(self, weight=1.0, modes=(1, 4), times=16, quad_points=128):
        self.weight = float(weight)
        self.modes = list(modes)
        self.times = int(times)
        self.quad_points = int(quad_points)


class TrainTrace (object):
    """One record per completed epoch, in ``TRACE_COLUMNS`` order
    """
    columns = TRACE_COLUMNS

    def __init__(self, records=None):
        self.records = list(records or [])

    def __repr__(self):
        return '<{}.{} epochs:{}>'.format(
            self.__module__, type(self).__name__, len(self))

    def __len__(self):
        return len(self.records)

    def __iter__(self):
        return iter(self.records)

    def append(self, **record):
        unknown = set(record) - set(self.columns)
        if unknown:
            raise _error.ContractViolation(
                'unknown trace columns {}'.format(sorted(unknown)))
        self.records.append(dict((c, record.get(c)) for c in self.columns))

    def extend(self, other):
        self.records.extend(other.records)

    def column(self, name, phase=None):
        return [r[name] for r in self.records
                if phase is None or r['phase'] == phase]

    def best_so_far(self, phase=None):
        """Running minimum of the total loss
        """
        return list(_numpy.minimum.accumulate(
            self.column('total', phase=phase))) if len(self) else []


class _Batch (object):
    """Points with per-role jets and tapes, plus accumulated cotangents
    """
    def __init__(self, points, nets, roles):
        self.points = points
        self.jets = {}
        self.tapes = {}
        for role in roles:
            jet, tape = _diffnet.forward_jet_with_tape(nets[role], points)
            self.jets[role] = jet
            self.tapes[role] = tape
        self.cotangents = {}

    def sum(self, roles=None):
        if roles is None:
            roles = sorted(self.jets)
        return _functools.reduce(
            lambda a, b: a + b, [self.jets[r] for r in roles])

    def values(self, roles=None):
        return self.sum(roles=roles).value

    def add(self, role, cotangent):
        if role in self.cotangents:
            self.cotangents[role] = self.cotangents[role] + cotangent
        else:
            self.cotangents[role] = cotangent


def _sample_interior(nets, problem, plan, state, epoch):
    rng = _seeding.substream(
        state.seed, 'phase/{}/interior'.format(plan.name), epoch)
    domain = problem.domain
    if plan.sampler == 'uniform':
        return _geometry.sample_uniform(domain, plan.n_interior, rng).points
    if plan.sampler == 'grid':
        count = max(2, int(round(plan.n_interior ** (1.0 / domain.dim))) + 2)
        grid = _geometry.uniform_grid(domain, [count] * domain.dim)
        inside = _numpy.all(
            (grid > domain.low) & (grid < domain.high), axis=1)
        return grid[inside]
    if plan.sampler == 'ring_mix':
        score = None
        if state.residual_fraction:
            def score(points):
                jet = _functools.reduce(lambda a, b: a + b, [
                    _diffnet.forward_jet(nets[role], points)
                    for role in sorted(nets)])
                return _numpy.abs(problem.residual(points, jet)[0])
        return _geometry.sample_focused(
            domain, plan.n_interior, state.ring_width, state.ring_fraction,
            rng, residual_fraction=state.residual_fraction, score=score,
            pool_factor=state.pool_factor).points
    raise _error.ConfigurationError(
        'sampler {} draws no interior points'.format(plan.sampler))


def _evaluate(nets, problem, plan, state, epoch, interior, gamma_t, w_bc_t):
    """Loss breakdown, per-role gradients and constraint violations
    """
    roles = sorted(nets)
    trainable = [r for r in plan.trainable if r in nets]
    batches = []
    parts = {}
    violations = {}
    dim = problem.dim

    if interior is not None:
        batch = _Batch(interior, nets, roles)
        batches.append(batch)
        if 'physics' in plan.losses:
            jet_b = batch.jets.get('boundary')
            value, cotangent = _objective.physics_loss(
                problem, interior, batch.jets['domain'], jet_b)
            weight = plan.losses['physics']
            parts['physics'] = weight * value
            for role in trainable:
                batch.add(role, cotangent.scaled(weight))
        if 'role' in plan.losses and 'boundary' in nets and \
                state.role is not None:
            distances = problem.domain.distances(interior)
            value, d_u_d, d_u_b = _objective.role_loss(
                distances, batch.jets['domain'].value,
                batch.jets['boundary'].value, state.role)
            parts['role'] = value
            for role, d_value in (('domain', d_u_d), ('boundary', d_u_b)):
                if role in trainable:
                    batch.add(role, _diffnet.value_cotangent(
                        gamma_t * d_value, dim))

    constraint_batches = {}
    if any(loss in plan.losses for loss in ('alm', 'warmup', 'role')):
        for constraint in state.constraints:
            batch = _Batch(constraint.points, nets, roles)
            batches.append(batch)
            constraint_batches[constraint.name] = batch

    if 'alm' in plan.losses:
        alm = {}
        for constraint in state.constraints:
            batch = constraint_batches[constraint.name]
            c = constraint.violation(batch.sum())
            violations[constraint.name] = c
            value, d_c = _objective.alm_penalty(state.alm[constraint.name], c)
            alm[constraint.name] = value
            weight = plan.losses['alm'] * w_bc_t * \
                state.constraint_weights.get(constraint.name, 1.0)
            cotangent = constraint.cotangent(weight * d_c, dim)
            for role in trainable:
                batch.add(role, cotangent)
        parts['alm'] = alm

    if 'role' in plan.losses and 'boundary' in nets and \
            state.role is not None and state.role.boundary_energy and \
            'boundary' in constraint_batches:
        batch = constraint_batches['boundary']
        value, d_u_b = _objective.boundary_energy_loss(
            batch.jets['boundary'].value, state.role)
        parts['role'] = parts.get('role', 0.0) + value
        if 'boundary' in trainable:
            batch.add('boundary', _diffnet.value_cotangent(
                gamma_t * d_u_b, dim))

    if 'warmup' in plan.losses:
        constraint = state.constraint('boundary')
        batch = constraint_batches['boundary']
        value, d_values = _objective.warmup_loss(
            batch.values(), constraint.targets)
        weight = plan.losses['warmup']
        parts['warmup'] = weight * value
        for role in trainable:
            batch.add(role, _diffnet.value_cotangent(weight * d_values, dim))

    if 'modal' in plan.losses and state.modal is not None:
        rng = _seeding.substream(
            state.seed, 'phase/{}/modal'.format(plan.name), epoch)
        (t0, t1) = problem.domain.bounds[1]
        times = _numpy.sort(rng.uniform(t0, t1, size=state.modal.times))
        nodes = _objective.modal_nodes(
            problem, times, state.modal.quad_points)
        batch = _Batch(nodes, nets, roles)
        batches.append(batch)
        value, d_values = _objective.modal_prior_loss(
            problem, batch.values(), times, state.modal.quad_points,
            modes=state.modal.modes)
        parts['modal'] = value
        weight = plan.losses['modal'] * state.modal.weight
        for role in trainable:
            batch.add(role, _diffnet.value_cotangent(weight * d_values, dim))

    if 'normalization' in plan.losses:
        grid = _fokker_planck.normalization_grid(problem)
        batch = _Batch(grid, nets, roles)
        batches.append(batch)
        mass = _fokker_planck.fp_mass(batch.values(), problem.dx)
        value, d_mass = _objective.fp_constraint_loss(mass)
        parts['normalization'] = value
        d_values = _numpy.full(grid.shape[0], d_mass * problem.dx)
        weight = plan.losses['normalization']
        for role in trainable:
            batch.add(role, _diffnet.value_cotangent(weight * d_values, dim))

    for loss, data_roles in (('data', roles), ('baseline-data', ['boundary'])):
        if loss not in plan.losses:
            continue
        points, targets = state.data
        batch = _Batch(points, nets, data_roles)
        batches.append(batch)
        value, d_values = _objective.data_loss(
            batch.values(roles=data_roles), targets)
        parts['data'] = value
        for role in data_roles:
            if role in trainable:
                batch.add(role, _diffnet.value_cotangent(
                    plan.losses[loss] * d_values, dim))

    if 'pinning' in plan.losses:
        batch = _Batch(state.pin_points, nets, ['domain'])
        batches.append(batch)
        value, d_values = _objective.pinning_loss(batch.values(['domain']))
        parts['pinning'] = value
        if 'domain' in trainable:
            batch.add('domain', _diffnet.value_cotangent(
                plan.losses['pinning'] * d_values, dim))

    weights = plan.losses
    breakdown = _objective.total_loss(
        physics=parts.get('physics'),
        alm=parts.get('alm'),
        role=parts.get('role'),
        modal=parts.get('modal'),
        normalization=parts.get('normalization'),
        data=parts.get('data'),
        pinning=parts.get('pinning'),
        warmup=parts.get('warmup'),
        w_bc=weights.get('alm', 1.0) * w_bc_t,
        gamma=gamma_t,
        modal_weight=weights.get('modal', 1.0) * (
            state.modal.weight if state.modal is not None else 1.0),
        constraint_weights=state.constraint_weights,
        data_weight=weights.get('data', weights.get('baseline-data', 1.0)),
        pinning_weight=weights.get('pinning', 1.0),
        normalization_weight=weights.get('normalization', 1.0))

    grads = {}
    for batch in batches:
        for role, cotangent in sorted(batch.cotangents.items()):
            g = _diffnet.backprop_jets(
                nets[role], batch.points, cotangent, tape=batch.tapes[role])
            if role in grads:
                grads[role] = grads[role] + g
            else:
                grads[role] = g
    for role in trainable:
        if role not in grads:
            grads[role] = _diffnet.ParamGrads.zeros_like(nets[role])
    return breakdown, grads, violations


def _validation_error(nets, problem, state):
    points = state.validation_points
    values = sum(_diffnet.evaluate_values(nets[role], points)
                 for role in sorted(nets))
    exact = problem.exact(points)
    return float(_numpy.linalg.norm(values - exact) /
                 _numpy.linalg.norm(exact))


def _violation_norm(c):
    return float(_numpy.sqrt(_numpy.mean(c * c))) if len(c) else 0.0


def _update_alm(state, plan, violations, epoch, plateau):
    """Scheduled multiplier updates and penalty ramps after one step
    """
    if state.fixed_penalty:
        return
    for name, c in sorted(violations.items()):
        alm = state.alm[name]
        if (epoch + 1) % alm.k == 0:
            alm = _objective.alm_update(alm, c)
        if (epoch + 1) % alm.h == 0:
            ramp = plan.ramp_policy == 'scheduled'
            if plan.ramp_policy == 'plateau':
                norm = _violation_norm(c)
                previous = plateau.get(name)
                ramp = previous is not None and \
                    previous - norm < state.plateau_delta
                plateau[name] = norm
            if ramp:
                alm = _objective.rho_ramp(alm)
                _LOG.debug('{} penalty of {} ramped to {:g}'.format(
                    plan.name, name, alm.rho))
        state.alm[name] = alm


def train_phase(nets, problem, plan, state):
    """Run ``plan`` and return ``(nets, alm states, trace)``

    ``nets`` is not modified; networks outside ``plan.trainable`` come
    back as the very same objects.  ``state`` carries the multipliers
    and Adam moments into the next phase.  On a non-finite loss part or
    gradient TrainingAborted carries the last parameters that gave a
    finite loss and the partial trace.
    """
    nets = dict(nets)
    trace = TrainTrace()
    if plan.epochs == 0:
        return nets, dict(state.alm), trace
    trainable = [role for role in plan.trainable if role in nets]
    if not trainable:
        raise _error.ConfigurationError(
            'phase {} trains missing networks {}'.format(
                plan.name, list(plan.trainable)))
    for role in trainable:
        if role not in state.adam_states:
            state.adam_states[role] = _adam.AdamState.zeros(nets[role])
    _LOG.info('start phase {} ({} epochs, sampler {}, training {})'.format(
        plan.name, plan.epochs, plan.sampler, ', '.join(trainable)))
    early = plan.early_stop
    best = None
    best_nets = None
    wait = 0
    plateau = {}
    interior = None
    last_good = None
    start = _time.perf_counter()
    for epoch in range(plan.epochs):
        gamma_t = _objective.gamma(plan.gamma, min(epoch, plan.gamma.T))
        w_bc_t = _objective.gamma(plan.w_bc, min(epoch, plan.w_bc.T))
        if plan.needs_interior() and plan.sampler != 'boundary_only':
            if interior is None or (
                    plan.resample_every and epoch % plan.resample_every == 0):
                interior = _sample_interior(nets, problem, plan, state, epoch)
        try:
            breakdown, grads, violations = _evaluate(
                nets, problem, plan, state, epoch, interior, gamma_t, w_bc_t)
            for role in trainable:
                if not grads[role].is_finite():
                    raise _error.TrainingAborted(part='gradient')
        except _error.TrainingAborted as e:
            aborted = _error.TrainingAborted(
                part=e.part, epoch=epoch, nets=last_good or dict(nets),
                phase=plan.name)
            aborted.trace = trace
            _LOG.error(str(aborted))
            raise aborted
        last_good = dict(nets)
        if early is not None and (
                best is None or breakdown.total < best - early.min_delta):
            best = breakdown.total
            best_nets = dict(nets)
            wait = 0
        elif early is not None:
            wait += 1
        for role in trainable:
            nets[role], state.adam_states[role] = _adam.adam_step(
                nets[role], grads[role], state.adam_states[role], state.adam)
        _update_alm(state, plan, violations, epoch, plateau)
        validation = None
        if state.validate_every and state.validation_points is not None \
                and epoch % state.validate_every == 0:
            validation = _validation_error(nets, problem, state)
        alm_states = [state.alm[name] for name in sorted(state.alm)]
        trace.append(
            phase=plan.name,
            epoch=epoch,
            total=breakdown.total,
            physics=breakdown.physics,
            alm=breakdown.alm_total(),
            role=breakdown.role,
            modal=breakdown.modal,
            normalization=breakdown.normalization,
            data=breakdown.data,
            pinning=breakdown.pinning,
            warmup=breakdown.warmup,
            gamma=gamma_t,
            w_bc=w_bc_t,
            rho=max(a.rho for a in alm_states) if alm_states else None,
            lambda_inf=max(a.lambda_norm() for a in alm_states)
            if alm_states else None,
            validation_rel_l2=validation,
            wall_clock_s=_time.perf_counter() - start,
            )
        _LOG.debug('{} epoch {}: total {:.6g} gamma {:.4g} w_bc {:.4g}'.format(
            plan.name, epoch, breakdown.total, gamma_t, w_bc_t))
        if early is not None and wait >= early.patience:
            _LOG.info('early stop in phase {} at epoch {}'.format(
                plan.name, epoch))
            break
    if early is not None and early.restore_best and best_nets is not None:
        _LOG.info('restore best parameters of phase {} (total {:.6g})'.format(
            plan.name, best))
        nets = best_nets
    _LOG.info('end phase {} after {} epochs'.format(plan.name, len(trace)))
    return nets, dict(state.alm), trace
