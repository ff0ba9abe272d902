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

"""Training losses for the summed network ``u = u_D + u_B``

Every loss returns its value together with the derivative of that value
with respect to the network quantities it reads (values, or whole jets
for the physics residual).  The trainer scales those derivatives by the
active weights, lifts them to jet cotangents and hands them to
``diffnet.backprop_jets``.

>>> state = AlmState(lambdas=[0.0, 0.0], rho=2.0)
>>> value, d_c = alm_penalty(state, [1.0, 1.0])
>>> value, d_c.tolist()
(1.0, [1.0, 1.0])
"""

import logging as _logging
import math as _math

import numpy as _numpy

from . import diffnet as _diffnet
from . import error as _error
from .problem import wave as _wave


_LOG = _logging.getLogger(__name__)


class AlmState (object):
    """Multipliers and penalty parameter of one constraint set

    ``lambdas`` holds one multiplier per constraint point.  ``k`` and
    ``h`` are the multiplier-update and penalty-ramp periods in epochs.
    """
    def __init__(self, lambdas, rho=1.0, Lambda=100.0, k=50, h=500,
                 eta=2.0, rho_max=100.0):
        self.lambdas = _numpy.array(lambdas, dtype=_numpy.float64, ndmin=1)
        self.rho = float(rho)
        self.Lambda = float(Lambda)
        self.k = int(k)
        self.h = int(h)
        self.eta = float(eta)
        self.rho_max = float(rho_max)
        if not self.rho > 0 or not self.rho_max > 0 or not self.Lambda > 0:
            raise _error.ConfigurationError(
                'ALM needs rho, rho_max and Lambda > 0, not {}, {}, {}'.format(
                    self.rho, self.rho_max, self.Lambda))
        if self.eta < 1:
            raise _error.ConfigurationError(
                'ALM ramp factor must be >= 1, not {}'.format(self.eta))
        if self.k < 1 or self.h < 1:
            raise _error.ConfigurationError(
                'ALM periods must be >= 1, not k={} h={}'.format(
                    self.k, self.h))
        if self.rho > self.rho_max:
            raise _error.ConfigurationError(
                'rho {} exceeds rho_max {}'.format(self.rho, self.rho_max))

    def __repr__(self):
        return '<{}.{} n:{} rho:{:g} |lambda|:{:g}>'.format(
            self.__module__, type(self).__name__, len(self), self.rho,
            self.lambda_norm())

    def __len__(self):
        return self.lambdas.shape[0]

    @classmethod
    def fresh(cls, n, **kwargs):
        """Zero multipliers for ``n`` constraint points
        """
        return cls(lambdas=_numpy.zeros(n), **kwargs)

    def replace(self, **kwargs):
        values = {
            'lambdas': self.lambdas.copy(),
            'rho': self.rho,
            'Lambda': self.Lambda,
            'k': self.k,
            'h': self.h,
            'eta': self.eta,
            'rho_max': self.rho_max,
            }
        values.update(kwargs)
        return type(self)(**values)

    def lambda_norm(self):
        if not len(self):
            return 0.0
        return float(_numpy.abs(self.lambdas).max())


def alm_penalty(state, c):
    """``mean(λ c + ρ/2 c²)`` and its derivative with respect to ``c``

    >>> alm_penalty(AlmState([1.0, -1.0], rho=1.0), [2.0, 2.0])[0]
    2.0
    >>> alm_penalty(AlmState([0.0]), [0.0, 1.0])
    Traceback (most recent call last):
      ...
    dualpinn.error.ContractViolation: 2 violations for 1 multipliers
    """
    c = _numpy.asarray(c, dtype=_numpy.float64)
    if c.shape != state.lambdas.shape:
        raise _error.ContractViolation(
            '{} violations for {} multipliers'.format(c.size, len(state)))
    n = c.shape[0]
    value = float(_numpy.mean(state.lambdas * c + 0.5 * state.rho * c * c))
    return value, (state.lambdas + state.rho * c) / n


def alm_update(state, c):
    """``λ ← clip(λ + ρ c, [-Λ, Λ])`` with ``ρ`` left unchanged

    >>> alm_update(AlmState([99.8], rho=10.0), [0.5]).lambdas.tolist()
    [100.0]
    """
    c = _numpy.asarray(c, dtype=_numpy.float64)
    if c.shape != state.lambdas.shape:
        raise _error.ContractViolation(
            '{} violations for {} multipliers'.format(c.size, len(state)))
    lambdas = _numpy.clip(
        state.lambdas + state.rho * c, -state.Lambda, state.Lambda)
    return state.replace(lambdas=lambdas)


def rho_ramp(state):
    """``ρ ← min(η ρ, ρ_max)``

    >>> rho_ramp(AlmState([], rho=80.0)).rho
    100.0
    """
    return state.replace(rho=min(state.eta * state.rho, state.rho_max))


class RolePriorConfig (object):
    """Decay length and strengths of the role prior

    ``boundary_energy`` weights the optional third term
    ``mean(u_B²)`` over the constraint points; it is off by default.
    """
    def __init__(self, tau, alpha_int=1.0, alpha_bd=1.0, boundary_energy=0.0):
        if not tau > 0:
            raise _error.ConfigurationError(
                'role decay length tau must be positive, not {}'.format(tau))
        for name, value in [('alpha_int', alpha_int), ('alpha_bd', alpha_bd),
                            ('boundary_energy', boundary_energy)]:
            if value < 0:
                raise _error.ConfigurationError(
                    '{} must be nonnegative, not {}'.format(name, value))
        self.tau = float(tau)
        self.alpha_int = float(alpha_int)
        self.alpha_bd = float(alpha_bd)
        self.boundary_energy = float(boundary_energy)

    def __repr__(self):
        return '<{}.{} tau:{:g} alpha_int:{:g} alpha_bd:{:g}>'.format(
            self.__module__, type(self).__name__, self.tau, self.alpha_int,
            self.alpha_bd)

    @property
    def enabled(self):
        return bool(self.alpha_int or self.alpha_bd or self.boundary_energy)


def boundary_weight(d, tau):
    """``w_bd = exp(-d/τ)``; the interior weight is ``1 - w_bd``

    >>> boundary_weight(0.0, 0.1)
    1.0
    >>> round(boundary_weight(0.1, 0.1), 6)
    0.367879
    """
    d = _numpy.asarray(d, dtype=_numpy.float64)
    if not tau > 0:
        raise _error.ContractViolation(
            'tau must be positive, not {}'.format(tau))
    if _numpy.any(d < 0):
        raise _error.ContractViolation('negative boundary distance')
    w = _numpy.exp(-d / tau)
    if w.ndim == 0:
        return float(w)
    return w


def interior_weight(d, tau):
    return 1.0 - boundary_weight(d, tau)


def role_loss(distances, u_d, u_b, config):
    """Penalize ``u_D`` near the boundary and ``u_B`` deep inside

    Returns ``(value, d_u_d, d_u_b)`` for
    ``α_int mean(w_bd u_D²) + α_bd mean(w_in u_B²)``.

    >>> config = RolePriorConfig(tau=0.1)
    >>> role_loss([0.0, 0.0], [1.0, 3.0], [5.0, 5.0], config)[0]
    5.0
    """
    w_bd = _numpy.atleast_1d(boundary_weight(distances, config.tau))
    w_in = 1.0 - w_bd
    u_d = _numpy.asarray(u_d, dtype=_numpy.float64)
    u_b = _numpy.asarray(u_b, dtype=_numpy.float64)
    if not (w_bd.shape == u_d.shape == u_b.shape):
        raise _error.ContractViolation(
            'role loss inputs of shapes {}, {}, {} are not aligned'.format(
                w_bd.shape, u_d.shape, u_b.shape))
    n = u_d.shape[0]
    value = config.alpha_int * _numpy.mean(w_bd * u_d * u_d) + \
        config.alpha_bd * _numpy.mean(w_in * u_b * u_b)
    d_u_d = 2.0 * config.alpha_int * w_bd * u_d / n
    d_u_b = 2.0 * config.alpha_bd * w_in * u_b / n
    return float(value), d_u_d, d_u_b


def boundary_energy_loss(u_b, config):
    """Optional third role term: ``boundary_energy · mean(u_B²)`` on ∂Ω
    """
    u_b = _numpy.asarray(u_b, dtype=_numpy.float64)
    value = config.boundary_energy * float(_numpy.mean(u_b * u_b))
    return value, 2.0 * config.boundary_energy * u_b / u_b.shape[0]


class GammaSchedule (object):
    """Cosine annealing from ``gamma_max`` at ``t = 0`` to ``gamma_min`` at ``T``

    The same shape anneals the boundary weight ``w_bc``.
    """
    def __init__(self, gamma_min, gamma_max, T):
        if gamma_min < 0 or gamma_min > gamma_max:
            raise _error.ConfigurationError(
                'need 0 <= gamma_min <= gamma_max, not {} and {}'.format(
                    gamma_min, gamma_max))
        if T < 0:
            raise _error.ConfigurationError(
                'schedule length must be nonnegative, not {}'.format(T))
        self.gamma_min = float(gamma_min)
        self.gamma_max = float(gamma_max)
        self.T = int(T)

    def __repr__(self):
        return '<{}.{} {:g}->{:g} T:{}>'.format(
            self.__module__, type(self).__name__, self.gamma_max,
            self.gamma_min, self.T)

    @classmethod
    def constant(cls, value):
        return cls(gamma_min=value, gamma_max=value, T=0)


def gamma(schedule, t):
    """``γ_min + ½(γ_max - γ_min)(1 + cos(π t / T))``

    >>> schedule = GammaSchedule(gamma_min=0.01, gamma_max=1.0, T=100)
    >>> gamma(schedule, 0), gamma(schedule, 100), gamma(schedule, 50)
    (1.0, 0.01, 0.505)
    """
    if schedule.T == 0:
        return schedule.gamma_max
    if t < 0 or t > schedule.T:
        clamped = min(max(t, 0), schedule.T)
        _LOG.warning('schedule time {} outside [0, {}], clamped to {}'.format(
            t, schedule.T, clamped))
        t = clamped
    if t == 0:
        return schedule.gamma_max
    if t == schedule.T:
        return schedule.gamma_min
    span = schedule.gamma_max - schedule.gamma_min
    return schedule.gamma_min + 0.5 * span * (
        1.0 + _math.cos(_math.pi * t / schedule.T))


def physics_loss(problem, points, jet_d, jet_b=None):
    """Mean squared residual of the summed jet

    Returns ``(value, cotangent)``; the cotangent is shared by both
    networks because the residual only sees their sum.  ``jet_b`` is
    ``None`` for single-network runs.
    """
    jet = jet_d
    if jet_b is not None:
        if len(jet_b) != len(jet_d):
            raise _error.ContractViolation(
                'jets over {} and {} points'.format(len(jet_d), len(jet_b)))
        jet = jet_d + jet_b
    r, partials = problem.residual(points, jet)
    n = r.shape[0]
    scale = 2.0 * r / n
    cotangent = _diffnet.Jet(
        value=scale * partials.value,
        grad=scale[:, None] * partials.grad,
        hess=scale[:, None] * partials.hess)
    return float(_numpy.mean(r * r)), cotangent


def _mse(values, targets):
    values = _numpy.asarray(values, dtype=_numpy.float64)
    targets = _numpy.asarray(targets, dtype=_numpy.float64)
    if values.shape != targets.shape:
        raise _error.ContractViolation(
            'values of shape {} do not match targets {}'.format(
                values.shape, targets.shape))
    error = values - targets
    return float(_numpy.mean(error * error)), 2.0 * error / error.shape[0]


def warmup_loss(values, targets):
    """Mean squared boundary mismatch of ``u_D + u_B``

    >>> warmup_loss([1.0, -1.0], [0.0, 0.0])[0]
    1.0
    """
    return _mse(values, targets)


def data_loss(values, targets):
    """Mean squared error against pseudo-measurements
    """
    return _mse(values, targets)


def pinning_loss(values):
    """``mean(u_D²)`` at the pinned points

    >>> round(pinning_loss([0.1, -0.1])[0], 12)
    0.01
    """
    values = _numpy.asarray(values, dtype=_numpy.float64)
    return _mse(values, _numpy.zeros(values.shape))


def fp_constraint_loss(mass):
    """``(mass - 1)²`` and its derivative with respect to the mass

    >>> round(fp_constraint_loss(1.1)[0], 12)
    0.01
    """
    error = float(mass) - 1.0
    return error * error, 2.0 * error


def modal_nodes(problem, times, quad_points):
    """Space-time quadrature nodes, ``len(times)`` rows of ``quad_points``
    """
    if not isinstance(problem, _wave.Wave):
        raise _error.ConfigurationError(
            'the modal prior needs the wave problem, not {}'.format(
                problem.name))
    (x0, x1), _ = problem.domain.bounds
    x = _wave.quadrature_nodes(quad_points, x0, x1)
    times = _numpy.asarray(times, dtype=_numpy.float64)
    xx, tt = _numpy.meshgrid(x, times)
    return _numpy.column_stack([xx.ravel(), tt.ravel()])


def modal_prior_loss(problem, values, times, quad_points, modes=None):
    """Deviation of the sine coefficients from their free trajectories

    ``values`` holds ``u_D + u_B`` at ``modal_nodes(problem, times,
    quad_points)``.  Returns ``(value, d_values)`` for
    ``Σ_n mean_t (a_n(t) - a_n(0) cos(c n π t))²``.
    """
    nodes = modal_nodes(problem, times, quad_points)
    if modes is None:
        modes = sorted(problem.modes)
    times = _numpy.asarray(times, dtype=_numpy.float64)
    values = _numpy.asarray(values, dtype=_numpy.float64)
    if values.shape != (nodes.shape[0],):
        raise _error.ContractViolation(
            'need {} modal values, not {}'.format(nodes.shape[0],
                                                  values.shape))
    if not len(modes):
        return 0.0, _numpy.zeros(values.shape)
    x = nodes[:quad_points, 0]
    weights = _wave.trapezoid_weights(x)
    u = values.reshape(times.shape[0], quad_points)
    value = 0.0
    d_u = _numpy.zeros(u.shape)
    for n in modes:
        basis = 2.0 * weights * _numpy.sin(n * _numpy.pi * x)
        target = problem.modes.get(n, 0.0) * _numpy.cos(
            problem.c * n * _numpy.pi * times)
        deviation = u.dot(basis) - target
        value += float(_numpy.mean(deviation * deviation))
        d_u += (2.0 * deviation / times.shape[0])[:, None] * basis[None, :]
    return value, d_u.ravel()


class LossBreakdown (object):
    """Loss parts with the weights they entered the total with

    ``alm`` maps constraint-set names to their ALM penalties.  Parts a
    run does not use stay ``None``.
    """
    parts = ('physics', 'alm', 'role', 'modal', 'normalization', 'data',
             'pinning', 'warmup')

    def __init__(self, **kwargs):
        for part in self.parts:
            setattr(self, part, kwargs.pop(part, None))
        self.weights = kwargs.pop('weights', {})
        self.total = kwargs.pop('total', 0.0)
        if kwargs:
            raise TypeError('unexpected loss parts {}'.format(sorted(kwargs)))

    def __repr__(self):
        return '<{}.{} total:{:g}>'.format(
            self.__module__, type(self).__name__, self.total)

    def alm_total(self):
        if not self.alm:
            return None
        return sum(self.alm[name] for name in sorted(self.alm))

    def weighted(self):
        """``[(label, weight * value)]`` in a fixed order
        """
        terms = []
        for part in self.parts:
            value = getattr(self, part)
            if value is None:
                continue
            if part == 'alm':
                for name in sorted(value):
                    weight = self.weights.get('alm', 1.0) * \
                        self.weights.get('alm/{}'.format(name), 1.0)
                    terms.append(('alm/{}'.format(name), weight * value[name]))
            else:
                terms.append((part, self.weights.get(part, 1.0) * value))
        return terms


def total_loss(physics=None, alm=None, role=None, modal=None,
               normalization=None, data=None, pinning=None, warmup=None,
               w_bc=1.0, gamma=1.0, modal_weight=1.0, constraint_weights=None,
               data_weight=1.0, pinning_weight=1.0, normalization_weight=1.0):
    """Weighted sum of the active parts

    Raises TrainingAborted naming the first non-finite part.

    >>> total_loss(physics=0.5, role=2.0, gamma=0.5).total
    1.5
    >>> total_loss(physics=float('nan'))
    Traceback (most recent call last):
      ...
    dualpinn.error.TrainingAborted: non-finite physics
    """
    weights = {
        'physics': 1.0,
        'alm': w_bc,
        'role': gamma,
        'modal': modal_weight,
        'normalization': normalization_weight,
        'data': data_weight,
        'pinning': pinning_weight,
        'warmup': 1.0,
        }
    for name, weight in (constraint_weights or {}).items():
        weights['alm/{}'.format(name)] = weight
    breakdown = LossBreakdown(
        physics=physics, alm=dict(alm) if alm is not None else None,
        role=role, modal=modal, normalization=normalization, data=data,
        pinning=pinning, warmup=warmup, weights=weights)
    terms = breakdown.weighted()
    for label, value in terms:
        if not _math.isfinite(value):
            raise _error.TrainingAborted(part=label)
    breakdown.total = float(sum(value for label, value in terms))
    return breakdown
