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

"""Experiment files, presets and run identities

An experiment file holds one ``EXPERIMENT`` section.  ``EXTENDS``
names a parent file, resolved relative to the child and then among the
packaged presets; the child's keys override the parent's and keyed
sections (``ARCHITECTURE`` by ``ROLE``, ``PHASE`` by ``NAME``) merge
key by key.

>>> experiment = load_config(preset_path('laplace-dual'))
>>> experiment.section('PROBLEM').value('NAME')
'LAPLACE'
>>> experiment.section('ARCHITECTURE', key='BOUNDARY').value('LAYERS')
[16, 16, 16]
>>> 'EXTENDS' in experiment
False
"""

import codecs as _codecs
import hashlib as _hashlib
import io as _io
import logging as _logging
import os as _os
import os.path as _os_path

from . import component as _component
from . import error as _error
from . import problem as _problem


_LOG = _logging.getLogger(__name__)

PRESET_DIR = _os_path.join(_os_path.dirname(__file__), 'presets')

# variant name -> edits applied to a copy of the base experiment
ABLATIONS = [
    'full',
    'no-role-priors',
    'fixed-gamma',
    'fixed-penalty',
    'uniform-phase2',
    'one-net',
    ]


def preset_path(name):
    """Path of a packaged preset (with or without the ``.cfg`` suffix)
    """
    if not name.endswith('.cfg'):
        name = '{}.cfg'.format(name)
    return _os_path.join(PRESET_DIR, name)


def presets():
    return sorted(
        name[:-len('.cfg')] for name in _os.listdir(PRESET_DIR)
        if name.endswith('.cfg'))


def _resolve(name, base_dir):
    candidates = []
    if base_dir is not None:
        candidates.append(_os_path.join(base_dir, name))
    candidates.append(preset_path(name))
    for candidate in candidates:
        if _os_path.isfile(candidate):
            return _os_path.abspath(candidate)
    raise _error.ConfigurationError(
        'cannot find parent experiment {!r}'.format(name))


def loads_config(text, path=None, _seen=()):
    """Parse experiment text, resolving ``EXTENDS`` chains
    """
    experiment = _component.parse(stream=_io.StringIO(text), path=path)
    if experiment.name != 'EXPERIMENT':
        raise _error.ConfigurationError(
            'expected an EXPERIMENT, not {}'.format(experiment.name),
            line=experiment.line, path=path)
    if 'EXTENDS' not in experiment:
        return experiment
    extends = experiment.pop('EXTENDS')
    base_dir = None
    if path is not None:
        base_dir = _os_path.dirname(_os_path.abspath(path))
    try:
        parent_path = _resolve(extends.value, base_dir)
    except _error.ConfigurationError as e:
        e.line = extends.line
        e.path = path
        raise
    if parent_path in _seen:
        raise _error.ConfigurationError(
            'circular EXTENDS through {}'.format(parent_path),
            line=extends.line, path=path)
    parent = load_config(parent_path, _seen=_seen + (parent_path,))
    return merge(parent=parent, child=experiment)


def load_config(path, _seen=()):
    """Load an experiment file
    """
    _LOG.debug('load experiment from {}'.format(path))
    try:
        with _codecs.open(path, 'r', encoding='utf-8') as f:
            text = f.read()
    except (IOError, OSError) as e:
        raise _error.ConfigurationError(
            'cannot read experiment: {}'.format(e), path=path)
    path = _os_path.abspath(path)
    return loads_config(text, path=path, _seen=_seen + (path,))


def dump_config(experiment, stream=None):
    """Write an experiment; returns the text when ``stream`` is None
    """
    if stream is not None:
        experiment.write(stream=stream)
        return None
    with _io.StringIO() as stream:
        experiment.write(stream=stream)
        return stream.getvalue()


def _merge_into(target, source):
    for name, value in source.items():
        if name in source.subcomponents:
            for child in value:
                key = None
                if child.key:
                    key = child.value(child.key)
                existing = target.component(name, key=key)
                if existing is None:
                    target.setdefault(name, []).append(child.copy())
                else:
                    _merge_into(existing, child)
        elif name in source.multiple:
            for prop in value:
                target.set(name, prop.value, parameters=dict(prop.items()))
        else:
            target[name] = value.copy()


def merge(parent, child):
    """Overlay ``child`` onto a copy of ``parent``

    >>> import io
    >>> from . import component
    >>> parent = component.parse(io.StringIO(
    ...     'BEGIN:EXPERIMENT\\nSEED:1\\nBEGIN:ALM\\nRHO:2.0\\nETA:3.0\\n'
    ...     'END:ALM\\nEND:EXPERIMENT\\n'))
    >>> child = component.parse(io.StringIO(
    ...     'BEGIN:EXPERIMENT\\nBEGIN:ALM\\nRHO:5.0\\nEND:ALM\\n'
    ...     'END:EXPERIMENT\\n'))
    >>> merged = merge(parent, child)
    >>> merged.value('SEED'), merged.section('ALM').value('RHO')
    (1, 5.0)
    >>> merged.section('ALM').value('ETA')
    3.0
    """
    merged = parent.copy()
    merged.line = child.line
    _merge_into(merged, child)
    return merged


def apply_overrides(experiment, seed=None, epoch_scale=None):
    """Copy of ``experiment`` with command-line overrides applied
    """
    experiment = experiment.copy()
    if seed is not None:
        experiment.set('SEED', seed)
    if epoch_scale is not None:
        experiment.set('EPOCH-SCALE', epoch_scale)
    return experiment


def _section_for_edit(experiment, name, key=None):
    section = experiment.component(name, key=key)
    if section is None:
        section = _component.COMPONENT[name]()
        if key is not None:
            section.set(section.key, key)
        experiment.setdefault(name, []).append(section)
    return section


def ablation(experiment, variant):
    """Copy of ``experiment`` with one component of the method removed

    >>> base = load_config(preset_path('laplace-dual'))
    >>> ablation(base, 'one-net').value('NETWORKS')
    1
    >>> ablation(base, 'fixed-gamma').section('SCHEDULE').value('GAMMA-FIXED')
    1.0
    >>> ablation(base, 'bogus')
    Traceback (most recent call last):
      ...
    dualpinn.error.ConfigurationError: unknown ablation 'bogus'
    """
    if variant not in ABLATIONS:
        raise _error.ConfigurationError(
            'unknown ablation {!r}'.format(variant))
    experiment = experiment.copy()
    if variant == 'no-role-priors':
        prior = _section_for_edit(experiment, 'PRIOR')
        for name in ['ALPHA-INT', 'ALPHA-BD', 'BOUNDARY-ENERGY']:
            prior.set(name, 0.0)
    elif variant == 'fixed-gamma':
        schedule = _section_for_edit(experiment, 'SCHEDULE')
        schedule.set('GAMMA-FIXED', schedule.value('GAMMA-MAX'))
    elif variant == 'fixed-penalty':
        _section_for_edit(experiment, 'ALM').set('FIXED-PENALTY', True)
    elif variant == 'uniform-phase2':
        _section_for_edit(experiment, 'PHASE', key='PHASE2').set(
            'SAMPLER', 'UNIFORM')
    elif variant == 'one-net':
        experiment.set('NETWORKS', 1)
    return experiment


def make_problem(experiment):
    """Instantiate the configured benchmark problem
    """
    section = experiment.component('PROBLEM')
    if section is None:
        raise _error.ConfigurationError(
            'experiment has no PROBLEM section', line=experiment.line)
    name = section.value('NAME')
    kwargs = {}
    if name == 'FOKKER-PLANCK':
        kwargs = {
            'a': section.value('DRIFT-A'),
            'b': section.value('DRIFT-B'),
            'sigma': section.value('SIGMA'),
            'dx': section.value('DX'),
            }
    elif name == 'WAVE':
        kwargs = {'c': section.value('WAVE-SPEED')}
    try:
        return _problem.get(name, **kwargs)
    except _error.ConfigurationError as e:
        if e.line is None:
            e.line = section.line
        raise


def scaled_epochs(experiment, phase):
    """Epoch budget of ``phase`` after ``EPOCH-SCALE``

    A phase with a nonzero budget keeps at least one epoch.
    """
    epochs = experiment.section('PHASE', key=phase).value('EPOCHS')
    if not epochs:
        return 0
    return max(1, int(round(epochs * experiment.value('EPOCH-SCALE'))))


def run_id(experiment, seed=None):
    """Stable identity of an experiment and seed (12 hex digits)
    """
    if seed is not None:
        experiment = apply_overrides(experiment, seed=seed)
    text = dump_config(experiment)
    return _hashlib.sha256(text.encode('utf-8')).hexdigest()[:12]

