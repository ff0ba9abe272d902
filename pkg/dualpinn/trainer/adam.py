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

"""Bias-corrected Adam over the arrays of an MlpParams

>>> from .. import diffnet
>>> layer = diffnet.Layer(weight=[[0.5]], bias=[0.0],
...                       activation=diffnet.Linear())
>>> params = diffnet.MlpParams([layer])
>>> grads = diffnet.ParamGrads([[[2.0]], [-3.0]])
>>> new, state = adam_step(params, grads, AdamState.zeros(params), AdamConfig())
>>> round(float(new.layers[0].weight[0, 0]), 9), round(float(new.layers[0].bias[0]), 9)
(0.499, 0.001)
>>> state.step
1
"""

import numpy as _numpy

from .. import error as _error


class AdamConfig (object):
    def __init__(self, lr=1e-3, beta1=0.9, beta2=0.999, eps=1e-8):
        if not lr > 0:
            raise _error.ConfigurationError(
                'learning rate must be positive, not {}'.format(lr))
        if not 0 <= beta1 < 1 or not 0 <= beta2 < 1:
            raise _error.ConfigurationError(
                'Adam betas must lie in [0, 1), not {} and {}'.format(
                    beta1, beta2))
        self.lr = float(lr)
        self.beta1 = float(beta1)
        self.beta2 = float(beta2)
        self.eps = float(eps)

    def __repr__(self):
        return '<{}.{} lr:{:g}>'.format(
            self.__module__, type(self).__name__, self.lr)


class AdamState (object):
    """First and second moments per parameter array, and the step count
    """
    def __init__(self, m, v, step=0):
        self.m = [_numpy.asarray(a, dtype=_numpy.float64) for a in m]
        self.v = [_numpy.asarray(a, dtype=_numpy.float64) for a in v]
        self.step = int(step)

    @classmethod
    def zeros(cls, params):
        arrays = params.arrays()
        return cls(m=[_numpy.zeros_like(a) for a in arrays],
                   v=[_numpy.zeros_like(a) for a in arrays])


def adam_step(params, grads, state, config):
    """Return ``(new params, new state)``; inputs are left untouched
    """
    arrays = params.arrays()
    if len(grads.arrays) != len(arrays) or any(
            g.shape != a.shape for g, a in zip(grads.arrays, arrays)):
        raise _error.ContractViolation(
            'gradients do not match the shapes of {!r}'.format(params))
    if not grads.is_finite():
        raise _error.TrainingAborted(part='gradient')
    step = state.step + 1
    bc1 = 1.0 - config.beta1 ** step
    bc2 = 1.0 - config.beta2 ** step
    new_arrays = []
    m = []
    v = []
    for a, g, m0, v0 in zip(arrays, grads.arrays, state.m, state.v):
        m1 = config.beta1 * m0 + (1.0 - config.beta1) * g
        v1 = config.beta2 * v0 + (1.0 - config.beta2) * (g * g)
        update = (m1 / bc1) / (_numpy.sqrt(v1 / bc2) + config.eps)
        new_arrays.append(a - config.lr * update)
        m.append(m1)
        v.append(v1)
    return params.with_arrays(new_arrays), AdamState(m=m, v=v, step=step)
