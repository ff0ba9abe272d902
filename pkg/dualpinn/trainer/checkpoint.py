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

"""Save and restore networks and multipliers

Checkpoints use the experiment file format (see
``dualpinn.component.checkpoint``); floats are written with ``repr``
so a write/read cycle restores every parameter bit for bit.

>>> import io
>>> from .. import diffnet, objective
>>> nets = {'domain': diffnet.init_xavier([2, 3, 1], seed=1)}
>>> alm = {'boundary': objective.AlmState([0.25, -1.5], rho=4.0)}
>>> stream = io.StringIO()
>>> write_checkpoint(stream, nets, alm, epoch=7)
>>> _ = stream.seek(0)
>>> restored, restored_alm, epoch = read_checkpoint(stream)
>>> restored['domain'].equals(nets['domain']), epoch
(True, 7)
>>> restored_alm['boundary'].rho, restored_alm['boundary'].lambdas.tolist()
(4.0, [0.25, -1.5])
"""

import codecs as _codecs
import logging as _logging

import numpy as _numpy

from .. import component as _component
from .. import diffnet as _diffnet
from .. import error as _error
from .. import objective as _objective


_LOG = _logging.getLogger(__name__)

FORMAT_VERSION = 1


def _keyword(name):
    return name.upper().replace('_', '-')


def _code_name(keyword):
    return keyword.lower().replace('-', '_')


def _layer_section(layer):
    section = _component.COMPONENT['LAYER']()
    section.set('ACTIVATION', layer.activation.name)
    if isinstance(layer.activation, _diffnet.Sine):
        section.set('OMEGA0', layer.activation.omega0)
    section.set('SHAPE', list(layer.weight.shape))
    section.set('WEIGHTS', [float(w) for w in layer.weight.ravel()])
    section.set('BIASES', [float(b) for b in layer.bias])
    return section


def checkpoint_component(nets, alm_states, epoch):
    """Build the CHECKPOINT section for ``nets`` and ``alm_states``
    """
    checkpoint = _component.COMPONENT['CHECKPOINT']()
    checkpoint.set('FORMAT-VERSION', FORMAT_VERSION)
    checkpoint.set('EPOCH', epoch)
    for role in sorted(nets):
        network = _component.COMPONENT['NETWORK']()
        network.set('ROLE', _keyword(role))
        for layer in nets[role].layers:
            network.add_component(_layer_section(layer))
        checkpoint.add_component(network)
    for name in sorted(alm_states or {}):
        state = alm_states[name]
        section = _component.COMPONENT['ALM-STATE']()
        section.set('SET', _keyword(name))
        section.set('RHO', state.rho)
        section.set('LAMBDAS', [float(l) for l in state.lambdas])
        checkpoint.add_component(section)
    return checkpoint


def write_checkpoint(stream, nets, alm_states, epoch=0):
    checkpoint_component(nets, alm_states, epoch).write(stream=stream)


def save_checkpoint(path, nets, alm_states, epoch=0):
    _LOG.debug('write checkpoint {}'.format(path))
    with _codecs.open(path, 'w', encoding='utf-8') as f:
        write_checkpoint(f, nets, alm_states, epoch=epoch)


def _layer(section):
    shape = section.value('SHAPE')
    if len(shape) != 2:
        raise _error.ConfigurationError(
            'layer shape must have two entries, not {}'.format(shape),
            line=section.line)
    weights = section.value('WEIGHTS')
    if len(weights) != shape[0] * shape[1]:
        raise _error.ConfigurationError(
            '{} weights do not fill a {}x{} layer'.format(
                len(weights), shape[0], shape[1]), line=section.line)
    activation = _diffnet.activation(
        section.value('ACTIVATION'), omega0=section.value('OMEGA0'))
    return _diffnet.Layer(
        weight=_numpy.array(weights).reshape(shape),
        bias=section.value('BIASES'), activation=activation)


def read_checkpoint(stream, path=None, **alm_kwargs):
    """Return ``(nets, alm states, epoch)``

    ``alm_kwargs`` supply the ALM settings a checkpoint does not store
    (``Lambda``, ``k``, ``h``, ``eta``, ``rho_max``).
    """
    checkpoint = _component.parse(stream=stream, path=path)
    if checkpoint.name != 'CHECKPOINT':
        raise _error.ConfigurationError(
            'expected a CHECKPOINT, not {}'.format(checkpoint.name),
            path=path)
    nets = {}
    for network in checkpoint.components('NETWORK'):
        layers = [_layer(s) for s in network.components('LAYER')]
        try:
            nets[_code_name(network.value('ROLE'))] = _diffnet.MlpParams(
                layers=layers)
        except _error.ConfigurationError as e:
            e.line = network.line
            e.path = path
            raise
    alm_states = {}
    for section in checkpoint.components('ALM-STATE'):
        kwargs = dict(alm_kwargs)
        rho_max = max(kwargs.get('rho_max', 100.0), section.value('RHO'))
        kwargs['rho_max'] = rho_max
        alm_states[_code_name(section.value('SET'))] = _objective.AlmState(
            lambdas=section.value('LAMBDAS'), rho=section.value('RHO'),
            **kwargs)
    return nets, alm_states, checkpoint.value('EPOCH')


def load_checkpoint(path, **alm_kwargs):
    _LOG.debug('read checkpoint {}'.format(path))
    try:
        with _codecs.open(path, 'r', encoding='utf-8') as f:
            return read_checkpoint(f, path=path, **alm_kwargs)
    except (IOError, OSError) as e:
        raise _error.ConfigurationError(
            'cannot read checkpoint: {}'.format(e), path=path)
