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

"""Dense networks with exact input-derivative jets

A jet carries the network output together with its first derivatives
and its pure second derivatives with respect to each input coordinate.
Jets are pushed forward through every layer (the affine map acts
linearly on each channel, an elementwise activation σ maps
``v' = σ(z)``, ``g' = σ'(z) g`` and ``h' = σ''(z) g² + σ'(z) h``) and
``backprop_jets`` runs reverse mode over that computation, so losses
built from ``u``, ``u_x`` and ``u_xx`` can train the parameters.

Mixed partials are not carried.  All arithmetic is float64.

>>> params = init_xavier(layer_dims=[2, 4, 1], activation=Tanh(), seed=42)
>>> jet = forward_jet(params, [0.25, 0.5])
>>> jet.value.shape, jet.grad.shape, jet.hess.shape
((1,), (1, 2), (1, 2))
"""

import logging as _logging

import numpy as _numpy

from . import error as _error
from . import seeding as _seeding


_LOG = _logging.getLogger(__name__)

ACTIVATION = {}


class Activation (object):
    """Elementwise activation with its first three derivatives
    """
    name = None

    def __repr__(self):
        return '<{}.{} name:{}>'.format(
            self.__module__, type(self).__name__, self.name)

    def __eq__(self, other):
        return type(self) is type(other) and self.parameters() == \
            other.parameters()

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.name,) + self.parameters())

    def parameters(self):
        return ()

    def derivatives(self, z):
        """Return ``(σ(z), σ'(z), σ''(z), σ'''(z))``
        """
        raise NotImplementedError('cannot differentiate {!r}'.format(self))


class Tanh (Activation):
    name = 'TANH'

    def derivatives(self, z):
        # all derivatives from the activated value
        v = _numpy.tanh(z)
        d1 = 1.0 - v * v
        d2 = -2.0 * v * d1
        d3 = -2.0 * d1 * d1 + 4.0 * v * v * d1
        return (v, d1, d2, d3)


class Sine (Activation):
    """``σ(z) = sin(ω₀ z)``

    >>> Sine(omega0=0)
    Traceback (most recent call last):
      ...
    dualpinn.error.ConfigurationError: Sine requires omega0 > 0, not 0
    """
    name = 'SINE'

    def __init__(self, omega0=30.0):
        if not omega0 > 0:
            raise _error.ConfigurationError(
                'Sine requires omega0 > 0, not {}'.format(omega0))
        self.omega0 = float(omega0)

    def __repr__(self):
        return '<{}.{} name:{} omega0:{}>'.format(
            self.__module__, type(self).__name__, self.name, self.omega0)

    def parameters(self):
        return (self.omega0,)

    def derivatives(self, z):
        w = self.omega0
        s = _numpy.sin(w * z)
        c = _numpy.cos(w * z)
        return (s, w * c, -w * w * s, -w * w * w * c)


class Linear (Activation):
    name = 'LINEAR'

    def derivatives(self, z):
        ones = _numpy.ones_like(z)
        zeros = _numpy.zeros_like(z)
        return (z, ones, zeros, zeros)


for _activation in [Linear, Sine, Tanh]:
    ACTIVATION[_activation.name] = _activation
del _activation


def activation(name, omega0=None):
    """Build an activation by name

    >>> activation('sine', omega0=30)
    <dualpinn.diffnet.Sine name:SINE omega0:30.0>
    >>> activation('relu')
    Traceback (most recent call last):
      ...
    dualpinn.error.ConfigurationError: unknown activation 'RELU'
    """
    name = name.upper()
    if name not in ACTIVATION:
        raise _error.ConfigurationError(
            'unknown activation {!r}'.format(name))
    if name == Sine.name:
        if omega0 is None:
            return Sine()
        return Sine(omega0=omega0)
    return ACTIVATION[name]()


class Layer (object):
    """One affine map ``z = W x + b`` followed by an activation
    """
    def __init__(self, weight, bias, activation):
        self.weight = _numpy.array(weight, dtype=_numpy.float64, ndmin=2)
        self.bias = _numpy.array(bias, dtype=_numpy.float64, ndmin=1)
        self.activation = activation
        if self.bias.shape != (self.weight.shape[0],):
            raise _error.ConfigurationError(
                'bias shape {} does not match weight shape {}'.format(
                    self.bias.shape, self.weight.shape))

    def __repr__(self):
        return '<{}.{} {}x{} {}>'.format(
            self.__module__, type(self).__name__, self.out_dim, self.in_dim,
            self.activation.name)

    @property
    def in_dim(self):
        return self.weight.shape[1]

    @property
    def out_dim(self):
        return self.weight.shape[0]


class MlpParams (object):
    """Weights and biases of one scalar-output subnetwork
    """
    def __init__(self, layers):
        self.layers = list(layers)
        if not self.layers:
            raise _error.ConfigurationError('a network needs layers')
        for previous, layer in zip(self.layers, self.layers[1:]):
            if previous.out_dim != layer.in_dim:
                raise _error.ConfigurationError(
                    'layer dims do not chain: {!r} -> {!r}'.format(
                        previous, layer))
        if self.layers[-1].out_dim != 1:
            raise _error.ConfigurationError(
                'output layer must have one unit, not {}'.format(
                    self.layers[-1].out_dim))
        if not isinstance(self.layers[-1].activation, Linear):
            raise _error.ConfigurationError('output layer must be linear')

    def __repr__(self):
        return '<{}.{} dims:{}>'.format(
            self.__module__, type(self).__name__,
            '-'.join(str(d) for d in self.dims))

    @property
    def input_dim(self):
        return self.layers[0].in_dim

    @property
    def dims(self):
        return [self.input_dim] + [layer.out_dim for layer in self.layers]

    def arrays(self):
        """Parameter arrays in a fixed order (W0, b0, W1, b1, ...)
        """
        arrays = []
        for layer in self.layers:
            arrays.extend([layer.weight, layer.bias])
        return arrays

    def with_arrays(self, arrays):
        """Return a new MlpParams with the same activations
        """
        arrays = list(arrays)
        if len(arrays) != 2 * len(self.layers):
            raise _error.ContractViolation(
                'expected {} arrays, got {}'.format(
                    2 * len(self.layers), len(arrays)))
        return MlpParams(layers=[
            Layer(weight=arrays[2*i], bias=arrays[2*i+1],
                  activation=layer.activation)
            for i, layer in enumerate(self.layers)])

    def copy(self):
        return self.with_arrays([a.copy() for a in self.arrays()])

    def is_finite(self):
        return all(_numpy.all(_numpy.isfinite(a)) for a in self.arrays())

    def equals(self, other):
        """Bitwise parameter equality
        """
        if [l.activation for l in self.layers] != \
                [l.activation for l in other.layers]:
            return False
        return all(a.shape == b.shape and _numpy.array_equal(a, b)
                   for a, b in zip(self.arrays(), other.arrays()))

    def count(self):
        return sum(a.size for a in self.arrays())


class ParamGrads (object):
    """Gradient arrays shaped like an MlpParams' ``arrays()``
    """
    def __init__(self, arrays):
        self.arrays = [_numpy.asarray(a, dtype=_numpy.float64)
                       for a in arrays]

    def __add__(self, other):
        return ParamGrads([a + b for a, b in zip(self.arrays, other.arrays)])

    def scaled(self, factor):
        return ParamGrads([factor * a for a in self.arrays])

    def dot(self, arrays):
        """Inner product with a direction given as a list of arrays
        """
        return float(sum(_numpy.sum(a * b)
                         for a, b in zip(self.arrays, arrays)))

    def is_finite(self):
        return all(_numpy.all(_numpy.isfinite(a)) for a in self.arrays)

    @classmethod
    def zeros_like(cls, params):
        return cls([_numpy.zeros_like(a) for a in params.arrays()])


class Jet (object):
    """Batched jet: values ``(n,)``, gradients and diagonal Hessians ``(n, d)``

    Jets add componentwise, which is how the shared residual of two
    subnetworks is formed.

    >>> a = Jet(value=[1.0], grad=[[1.0, 2.0]], hess=[[0.0, 1.0]])
    >>> b = a + a
    >>> b.value.tolist(), b.grad.tolist(), b.hess.tolist()
    ([2.0], [[2.0, 4.0]], [[0.0, 2.0]])
    """
    def __init__(self, value, grad, hess):
        self.value = _numpy.asarray(value, dtype=_numpy.float64)
        self.grad = _numpy.asarray(grad, dtype=_numpy.float64)
        self.hess = _numpy.asarray(hess, dtype=_numpy.float64)

    def __repr__(self):
        return '<{}.{} n:{} d:{}>'.format(
            self.__module__, type(self).__name__, len(self), self.dim)

    def __len__(self):
        return self.value.shape[0]

    def __add__(self, other):
        if self.grad.shape != other.grad.shape:
            raise _error.ContractViolation(
                'cannot add jets of shapes {} and {}'.format(
                    self.grad.shape, other.grad.shape))
        return Jet(value=self.value + other.value,
                   grad=self.grad + other.grad,
                   hess=self.hess + other.hess)

    def scaled(self, factor):
        return Jet(value=factor * self.value, grad=factor * self.grad,
                   hess=factor * self.hess)

    @property
    def dim(self):
        return self.grad.shape[1]

    @classmethod
    def zeros(cls, n, dim):
        return cls(value=_numpy.zeros(n), grad=_numpy.zeros((n, dim)),
                   hess=_numpy.zeros((n, dim)))

    def is_finite(self):
        return bool(_numpy.all(_numpy.isfinite(self.value)) and
                    _numpy.all(_numpy.isfinite(self.grad)) and
                    _numpy.all(_numpy.isfinite(self.hess)))


# a cotangent has the same shape as the jet it is paired with
JetCotangent = Jet


def _check_dims(layer_dims):
    layer_dims = list(layer_dims)
    if len(layer_dims) < 2:
        raise _error.ConfigurationError(
            'need at least input and output dims, not {}'.format(layer_dims))
    for dim in layer_dims:
        if int(dim) != dim or dim < 1:
            raise _error.ConfigurationError(
                'invalid layer dimension {!r} in {}'.format(dim, layer_dims))
    if layer_dims[-1] != 1:
        raise _error.ConfigurationError(
            'output dimension must be 1, not {}'.format(layer_dims[-1]))
    return [int(d) for d in layer_dims]


def _build(layer_dims, activation, bound, seed, label):
    rng = _seeding.substream(seed, label)
    layers = []
    pairs = list(zip(layer_dims, layer_dims[1:]))
    for i, (fan_in, fan_out) in enumerate(pairs):
        limit = bound(i, fan_in, fan_out)
        weight = rng.uniform(-limit, limit, size=(fan_out, fan_in))
        if i == len(pairs) - 1:
            act = Linear()
        else:
            act = activation
        layers.append(Layer(
            weight=weight, bias=_numpy.zeros(fan_out), activation=act))
    return MlpParams(layers=layers)


def init_xavier(layer_dims, activation=None, seed=0, label='xavier'):
    """Xavier-uniform weights, zero biases

    >>> p = init_xavier([2, 4, 1], Tanh(), seed=42)
    >>> q = init_xavier([2, 4, 1], Tanh(), seed=42)
    >>> p.equals(q)
    True
    >>> bool(abs(p.layers[0].weight).max() <= 1.0)
    True
    >>> [float(abs(layer.bias).max()) for layer in p.layers]
    [0.0, 0.0]
    >>> p.layers[-1].activation
    <dualpinn.diffnet.Linear name:LINEAR>
    """
    layer_dims = _check_dims(layer_dims)
    if activation is None:
        activation = Tanh()

    def bound(i, fan_in, fan_out):
        return _numpy.sqrt(6.0 / (fan_in + fan_out))

    return _build(layer_dims, activation, bound, seed, 'init/' + label)


def init_siren(layer_dims, omega0=30.0, seed=0, label='siren'):
    """Sine network: first layer U[±1/fan_in], deeper U[±√(6/fan_in)/ω₀]

    >>> p = init_siren([2, 16, 1], omega0=30, seed=7)
    >>> bool(abs(p.layers[0].weight).max() <= 0.5)
    True
    >>> bool(abs(p.layers[1].weight).max() <= (6.0 / 16) ** 0.5 / 30)
    True
    """
    layer_dims = _check_dims(layer_dims)
    if not omega0 > 0:
        raise _error.ConfigurationError(
            'omega0 must be positive, not {}'.format(omega0))
    activation = Sine(omega0=omega0)

    def bound(i, fan_in, fan_out):
        if i == 0:
            return 1.0 / fan_in
        return _numpy.sqrt(6.0 / fan_in) / omega0

    return _build(layer_dims, activation, bound, seed, 'init/' + label)


def _as_points(params, x):
    points = _numpy.array(x, dtype=_numpy.float64, ndmin=2)
    if points.ndim != 2 or points.shape[1] != params.input_dim:
        raise _error.ContractViolation(
            'points of shape {} do not match input dim {}'.format(
                _numpy.shape(x), params.input_dim))
    return points


def evaluate_values(params, x):
    """Network values only, shape ``(n,)``
    """
    v = _as_points(params, x)
    for layer in params.layers:
        z = v.dot(layer.weight.T) + layer.bias
        if isinstance(layer.activation, Linear):
            v = z
        elif isinstance(layer.activation, Tanh):
            v = _numpy.tanh(z)
        else:
            v = layer.activation.derivatives(z)[0]
    return v[:, 0]


class _Tape (object):
    """Intermediates of one forward pass, consumed by backprop_jets
    """
    def __init__(self, points):
        self.points = points
        self.records = []


def _forward(params, points):
    n, d = points.shape
    v = points
    g = _numpy.broadcast_to(_numpy.eye(d), (n, d, d)).copy()
    h = _numpy.zeros((n, d, d))
    tape = _Tape(points=points)
    for layer in params.layers:
        w = layer.weight
        z = v.dot(w.T) + layer.bias
        gz = _numpy.matmul(g, w.T)
        hz = _numpy.matmul(h, w.T)
        s0, s1, s2, s3 = layer.activation.derivatives(z)
        tape.records.append((v, g, h, gz, hz, s1, s2, s3))
        v = s0
        g = s1[:, None, :] * gz
        h = s2[:, None, :] * gz * gz + s1[:, None, :] * hz
    jet = Jet(value=v[:, 0], grad=g[:, :, 0], hess=h[:, :, 0])
    return jet, tape


def forward_jet(params, x):
    """Push the coordinate jet of ``x`` through the network

    ``x`` is a single point of dimension ``d`` or an ``(n, d)`` batch;
    the returned Jet always has a leading batch axis.

    >>> w = Layer(weight=[[2.0, -3.0]], bias=[0.5], activation=Linear())
    >>> jet = forward_jet(MlpParams([w]), [1.0, 1.0])
    >>> jet.value.tolist(), jet.grad.tolist(), jet.hess.tolist()
    ([-0.5], [[2.0, -3.0]], [[0.0, 0.0]])
    >>> forward_jet(MlpParams([w]), [1.0])
    Traceback (most recent call last):
      ...
    dualpinn.error.ContractViolation: points of shape (1,) do not match input dim 2
    """
    jet, tape = _forward(params, _as_points(params, x))
    return jet


def forward_jet_with_tape(params, x):
    """Like forward_jet, also returning the tape for backprop_jets
    """
    return _forward(params, _as_points(params, x))


def backprop_jets(params, x, cotangent, tape=None):
    """Gradient of ``Σ (c_u u + Σ_i c_g,i ∂_i u + Σ_i c_h,i ∂²_i u)``

    ``cotangent`` is a Jet shaped like ``forward_jet(params, x)``.  The
    batch sum is reduced by fixed-order matrix products, so identical
    inputs give bitwise identical gradients.

    >>> w = Layer(weight=[[2.0, -3.0]], bias=[0.5], activation=Linear())
    >>> params = MlpParams([w])
    >>> seed = Jet(value=[1.0], grad=[[0.0, 0.0]], hess=[[0.0, 0.0]])
    >>> grads = backprop_jets(params, [[0.3, 0.7]], seed)
    >>> grads.arrays[0].tolist(), grads.arrays[1].tolist()
    ([[0.3, 0.7]], [1.0])
    """
    if tape is None:
        points = _as_points(params, x)
        if points.shape[0] == 0:
            raise _error.ContractViolation('empty batch')
        _, tape = _forward(params, points)
    n, d = tape.points.shape
    if n == 0:
        raise _error.ContractViolation('empty batch')
    if cotangent.value.shape != (n,) or cotangent.grad.shape != (n, d) or \
            cotangent.hess.shape != (n, d):
        raise _error.ContractViolation(
            'cotangent shapes {}/{}/{} do not match batch ({}, {})'.format(
                cotangent.value.shape, cotangent.grad.shape,
                cotangent.hess.shape, n, d))
    dv = cotangent.value[:, None]
    dg = cotangent.grad[:, :, None]
    dh = cotangent.hess[:, :, None]
    arrays = []
    for layer, record in reversed(list(zip(params.layers, tape.records))):
        v, g, h, gz, hz, s1, s2, s3 = record
        s1b = s1[:, None, :]
        s2b = s2[:, None, :]
        s3b = s3[:, None, :]
        dz = dv * s1 + _numpy.sum(
            dg * s2b * gz + dh * (s3b * gz * gz + s2b * hz), axis=1)
        dgz = dg * s1b + 2.0 * dh * s2b * gz
        dhz = dh * s1b
        w = layer.weight
        dw = dz.T.dot(v) + \
            dgz.reshape(-1, w.shape[0]).T.dot(g.reshape(-1, w.shape[1])) + \
            dhz.reshape(-1, w.shape[0]).T.dot(h.reshape(-1, w.shape[1]))
        db = dz.sum(axis=0)
        arrays[:0] = [dw, db]
        dv = dz.dot(w)
        dg = _numpy.matmul(dgz, w)
        dh = _numpy.matmul(dhz, w)
    return ParamGrads(arrays)


def value_cotangent(d_value, dim):
    """Cotangent seeding only the value channel
    """
    d_value = _numpy.asarray(d_value, dtype=_numpy.float64)
    n = d_value.shape[0]
    return Jet(value=d_value, grad=_numpy.zeros((n, dim)),
               hess=_numpy.zeros((n, dim)))
