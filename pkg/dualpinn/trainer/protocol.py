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

"""Turn an experiment into phase plans and run them

Two protocols cover the benchmarks:

* ``run_protocol``: an optional boundary warm-up, Phase 1 on uniform
  points with the full loss and a high role weight, then Phase 2 on
  ring-focused points with annealed role and boundary weights.
  ``ONE-PHASE`` experiments stop after Phase 1.  Fokker-Planck runs
  add the normalization penalty to both phases.
* ``run_sequential_fp``: the three Fokker-Planck phases, fitting the
  boundary network to pseudo-measurements, then the domain network to
  the residual with the boundary network frozen, then both jointly.
"""

import logging as _logging


from .. import config as _config
from .. import diffnet as _diffnet
from .. import error as _error
from .. import geometry as _geometry
from .. import objective as _objective
from .. import seeding as _seeding
from ..bench import metrics as _metrics
from ..problem import fokker_planck as _fokker_planck
from . import adam as _adam
from . import phase as _phase


_LOG = _logging.getLogger(__name__)

PROTOCOLS = ('ONE-PHASE', 'TWO-PHASE', 'SEQUENTIAL-FP')


def _code_name(keyword):
    # config keywords -> code names (RING-MIX -> ring_mix)
    return keyword.lower().replace('-', '_')


def _config_name(name):
    return name.upper().replace('_', '-')


def roles(experiment):
    if experiment.value('NETWORKS') == 1:
        return ('domain',)
    return ('domain', 'boundary')


def build_nets(experiment, problem, seed=None):
    """Freshly initialized networks, keyed by role

    Tanh networks get Xavier weights, sine networks SIREN weights.
    """
    if seed is None:
        seed = experiment.value('SEED')
    nets = {}
    for role in roles(experiment):
        section = experiment.section('ARCHITECTURE', key=role.upper())
        layers = section.value('LAYERS')
        if not layers:
            raise _error.ConfigurationError(
                'no LAYERS for the {} network'.format(role),
                line=section.line)
        dims = [problem.dim] + list(layers) + [1]
        name = section.value('ACTIVATION')
        label = 'net/{}'.format(role)
        if name == 'SINE':
            nets[role] = _diffnet.init_siren(
                dims, omega0=section.value('OMEGA0'), seed=seed, label=label)
        else:
            nets[role] = _diffnet.init_xavier(
                dims, activation=_diffnet.activation(name), seed=seed,
                label=label)
        _LOG.info('{} network {} ({} parameters)'.format(
            role, dims, nets[role].count()))
    return nets


def _constraints(experiment, problem, seed):
    sampling = experiment.section('SAMPLING')
    boundary = _geometry.sample_boundary(
        problem.domain, sampling.value('BOUNDARY-POINTS'),
        _seeding.substream(seed, 'constraints/boundary'))
    initial = None
    if 'initial' in problem.constraint_names:
        initial = _geometry.sample_initial(
            problem.domain, sampling.value('INITIAL-POINTS'),
            _seeding.substream(seed, 'constraints/initial'))
        initial = initial.points
    return problem.constraints(boundary.points, initial_points=initial)


def build_state(experiment, problem, seed=None):
    """ObjectiveState holding constraints, multipliers and loss settings
    """
    if seed is None:
        seed = experiment.value('SEED')
    constraints = _constraints(experiment, problem, seed)
    alm = experiment.section('ALM')
    alm_kwargs = {
        'rho': alm.value('RHO'),
        'Lambda': alm.value('LAMBDA-MAX'),
        'k': alm.value('UPDATE-EVERY'),
        'h': alm.value('RAMP-EVERY'),
        'eta': alm.value('ETA'),
        'rho_max': alm.value('RHO-MAX'),
        }
    alm_states = dict(
        (c.name, _objective.AlmState.fresh(len(c), **alm_kwargs))
        for c in constraints)
    weights = {}
    for prop in alm.get('WEIGHT', []):
        name = dict(prop.items()).get('SET')
        if name is None:
            continue
        name = _code_name(name)
        if name not in problem.constraint_names:
            raise _error.ConfigurationError(
                '{} has no constraint set {}'.format(
                    problem.name, _config_name(name)), line=prop.line)
        weights[name] = prop.value
    role = None
    if 'boundary' in roles(experiment):
        prior = experiment.section('PRIOR')
        tau = prior.value('TAU')
        if tau is None:
            tau = 0.1 * problem.domain.diameter()
        role = _objective.RolePriorConfig(
            tau=tau,
            alpha_int=prior.value('ALPHA-INT'),
            alpha_bd=prior.value('ALPHA-BD'),
            boundary_energy=prior.value('BOUNDARY-ENERGY'))
    optimizer = experiment.section('OPTIMIZER')
    adam = _adam.AdamConfig(
        lr=optimizer.value('LEARNING-RATE'),
        beta1=optimizer.value('BETA1'),
        beta2=optimizer.value('BETA2'),
        eps=optimizer.value('EPSILON'))
    modal = None
    if experiment.has_section('MODAL'):
        section = experiment.section('MODAL')
        modal = _phase.ModalSettings(
            weight=section.value('WEIGHT'),
            modes=section.value('MODES'),
            times=section.value('TIMES'),
            quad_points=section.value('QUAD-POINTS'))
    sampling = experiment.section('SAMPLING')
    evaluation = experiment.section('EVALUATION')
    validation = None
    validate_every = evaluation.value('VALIDATE-EVERY')
    if validate_every and problem.has_exact:
        validation = _geometry.uniform_grid(
            problem.domain,
            [evaluation.value('VALIDATION-POINTS')] * problem.dim)
    data = pins = None
    if isinstance(problem, _fokker_planck.FokkerPlanck):
        rng = _seeding.substream(seed, 'fp/pseudo-measurements')
        points = _geometry.sample_uniform(
            problem.domain, sampling.value('PSEUDO-MEASUREMENTS'), rng).points
        data = (points, problem.exact(points))
        pins = problem.domain.bounds.T.copy()
    return _phase.ObjectiveState(
        problem=problem,
        seed=seed,
        constraints=constraints,
        alm=alm_states,
        role=role,
        fixed_penalty=alm.value('FIXED-PENALTY'),
        constraint_weights=weights,
        adam=adam,
        ring_width=sampling.value('RING-WIDTH'),
        ring_fraction=sampling.value('RING-FRACTION'),
        residual_fraction=sampling.value('RESIDUAL-FRACTION'),
        pool_factor=sampling.value('POOL-FACTOR'),
        modal=modal,
        data=data,
        pin_points=pins,
        validation_points=validation,
        validate_every=validate_every)


def _early_stop(experiment):
    if not experiment.has_section('EARLYSTOP'):
        return None
    section = experiment.section('EARLYSTOP')
    return _phase.EarlyStopConfig(
        patience=section.value('PATIENCE'),
        min_delta=section.value('MIN-DELTA'),
        restore_best=section.value('RESTORE-BEST'))


def _schedules(experiment, epochs, anneal):
    """``(gamma, w_bc)`` schedules of one phase
    """
    schedule = experiment.section('SCHEDULE')
    fixed = schedule.value('GAMMA-FIXED')
    gamma_max = schedule.value('GAMMA-MAX')
    wbc_max = schedule.value('WBC-MAX')
    if anneal:
        gamma = _objective.GammaSchedule(
            schedule.value('GAMMA-MIN'), gamma_max, epochs)
        w_bc = _objective.GammaSchedule(
            schedule.value('WBC-MIN'), wbc_max, epochs)
    else:
        gamma = _objective.GammaSchedule.constant(gamma_max)
        w_bc = _objective.GammaSchedule.constant(wbc_max)
    if fixed is not None:
        gamma = _objective.GammaSchedule.constant(fixed)
    return gamma, w_bc


def _plan(experiment, name, losses, trainable, anneal=False,
          ramp_policy='scheduled', sampler=None, early_stop=True):
    section = experiment.section('PHASE', key=name)
    epochs = _config.scaled_epochs(experiment, name)
    gamma, w_bc = _schedules(experiment, epochs, anneal)
    if sampler is None:
        sampler = _code_name(section.value('SAMPLER'))
    return _phase.PhasePlan(
        name=name,
        epochs=epochs,
        sampler=sampler,
        trainable=trainable,
        losses=losses,
        n_interior=section.value('INTERIOR-POINTS'),
        resample_every=section.value('RESAMPLE-EVERY'),
        gamma=gamma,
        w_bc=w_bc,
        ramp_policy=ramp_policy,
        early_stop=_early_stop(experiment) if early_stop else None)


def plans(experiment, problem):
    """Phase plans of a warm-up/Phase 1/Phase 2 experiment
    """
    nets = roles(experiment)
    losses = {'physics': 1.0, 'alm': 1.0}
    if 'boundary' in nets:
        losses['role'] = 1.0
    if experiment.has_section('MODAL'):
        losses['modal'] = 1.0
    if isinstance(problem, _fokker_planck.FokkerPlanck):
        losses['normalization'] = 1.0
    schedule = experiment.section('SCHEDULE')
    result = []
    if _config.scaled_epochs(experiment, 'WARMUP'):
        result.append(_plan(
            experiment, 'WARMUP', {'warmup': 1.0}, nets,
            sampler='boundary_only', early_stop=False))
    result.append(_plan(
        experiment, 'PHASE1', losses, nets,
        anneal=schedule.value('ANNEAL-PHASE1')))
    if experiment.value('PROTOCOL') == 'TWO-PHASE':
        result.append(_plan(
            experiment, 'PHASE2', losses, nets, anneal=True,
            ramp_policy=_code_name(
                experiment.section('ALM').value('RAMP-POLICY'))))
    return result


def sequential_fp_plans(experiment, problem):
    """Phase plans of the sequential Fokker-Planck protocol
    """
    if roles(experiment) != ('domain', 'boundary'):
        raise _error.ConfigurationError(
            'the sequential protocol needs two networks')
    return [
        _plan(experiment, 'FPDATA', {'baseline-data': 1.0}, ['boundary'],
              sampler='boundary_only'),
        _plan(experiment, 'FPRESIDUAL',
              {'physics': 1.0, 'normalization': 1.0, 'pinning': 1.0},
              ['domain']),
        _plan(experiment, 'FPJOINT',
              {'physics': 1.0, 'normalization': 1.0, 'data': 1.0,
               'role': 1.0},
              ['domain', 'boundary'], anneal=True),
        ]


def _train(nets, problem, phase_plans, state):
    trace = _phase.TrainTrace()
    for plan in phase_plans:
        try:
            nets, _, phase_trace = _phase.train_phase(
                nets, problem, plan, state)
        except _error.TrainingAborted as e:
            trace.extend(e.trace)
            e.trace = trace
            raise
        trace.extend(phase_trace)
    return nets, trace


def _evaluate(nets, problem, experiment, trace, seed):
    evaluation = experiment.section('EVALUATION')
    record = _metrics.evaluate(
        nets, problem, grid=evaluation.value('GRID'),
        boundary_grid=evaluation.value('BOUNDARY-GRID'))
    record.seed = seed
    record.fingerprint = _config.run_id(experiment, seed=seed)
    record.epochs_run = len(trace)
    # the clock restarts with every phase
    phases = sorted(set(trace.column('phase')))
    record.wall_clock_s = sum(
        trace.column('wall_clock_s', phase=p)[-1] for p in phases)
    return record


def run_protocol(problem, experiment, seed=None):
    """Train per the warm-up/Phase 1/Phase 2 protocol

    Returns ``(nets, trace, metrics, state)``.
    """
    if seed is None:
        seed = experiment.value('SEED')
    phase_plans = plans(experiment, problem)
    nets = build_nets(experiment, problem, seed=seed)
    state = build_state(experiment, problem, seed=seed)
    nets, trace = _train(nets, problem, phase_plans, state)
    return nets, trace, _evaluate(nets, problem, experiment, trace, seed), \
        state


def run_sequential_fp(experiment, seed=None):
    """Train a Fokker-Planck experiment with the three sequential phases

    Returns ``(nets, trace, metrics, state)``.
    """
    if seed is None:
        seed = experiment.value('SEED')
    problem = _config.make_problem(experiment)
    if not isinstance(problem, _fokker_planck.FokkerPlanck):
        raise _error.ConfigurationError(
            'the sequential protocol needs the Fokker-Planck problem, '
            'not {}'.format(problem.name))
    phase_plans = sequential_fp_plans(experiment, problem)
    nets = build_nets(experiment, problem, seed=seed)
    state = build_state(experiment, problem, seed=seed)
    nets, trace = _train(nets, problem, phase_plans, state)
    return nets, trace, _evaluate(nets, problem, experiment, trace, seed), \
        state


def run(experiment, seed=None):
    """Dispatch on ``PROTOCOL``; returns ``(nets, trace, metrics, state)``
    """
    protocol = experiment.value('PROTOCOL')
    _LOG.info('run {} experiment (seed {})'.format(
        protocol, experiment.value('SEED') if seed is None else seed))
    if protocol == 'SEQUENTIAL-FP':
        return run_sequential_fp(experiment, seed=seed)
    return run_protocol(_config.make_problem(experiment), experiment,
                        seed=seed)
