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

"""Domains, boundary distances and collocation samplers

>>> square = Rect(0, 1, 0, 1)
>>> float(square.distance([0.5, 0.5]))
0.5
>>> float(square.distance([0.0, 0.3]))
0.0
>>> float(Interval(-2.5, 2.5).distance(1.0))
1.5
"""

import logging as _logging

import numpy as _numpy
from scipy.stats import qmc as _qmc

from . import error as _error


_LOG = _logging.getLogger(__name__)

DOMAIN = {}

# tolerance for "on the boundary" checks
BOUNDARY_TOLERANCE = 1e-12


class Domain (object):
    """Axis-aligned domain base class

    ``bounds`` is a ``(dim, 2)`` array of ``[low, high]`` rows.  The
    spatial boundary is every face of the box except, for space-time
    domains, the initial and final time surfaces.
    """
    name = None
    spatial_axes = ()

    def __init__(self, bounds):
        self.bounds = _numpy.array(bounds, dtype=_numpy.float64, ndmin=2)
        for low, high in self.bounds:
            if not low < high:
                raise _error.ConfigurationError(
                    'invalid {} bounds [{}, {}]'.format(self.name, low, high))

    def __repr__(self):
        return '<{}.{} {}>'.format(
            self.__module__, type(self).__name__,
            ' x '.join('[{:g}, {:g}]'.format(*b) for b in self.bounds))

    @property
    def dim(self):
        return self.bounds.shape[0]

    @property
    def low(self):
        return self.bounds[:, 0]

    @property
    def high(self):
        return self.bounds[:, 1]

    def diameter(self):
        return float(_numpy.sqrt(_numpy.sum((self.high - self.low) ** 2)))

    def inradius(self):
        """Largest distance_to_boundary attained in the domain
        """
        widths = self.high - self.low
        return float(min(widths[list(self.spatial_axes)]) / 2.0)

    def as_points(self, x):
        points = _numpy.array(x, dtype=_numpy.float64, ndmin=2)
        if points.ndim != 2 or points.shape[1] != self.dim:
            raise _error.ContractViolation(
                'points of shape {} do not belong to the {}-d domain'.format(
                    _numpy.shape(x), self.dim))
        return points

    def contains(self, x, tolerance=BOUNDARY_TOLERANCE):
        points = self.as_points(x)
        return _numpy.all((points >= self.low - tolerance) &
                          (points <= self.high + tolerance), axis=1)

    def distances(self, points):
        """Distance to the spatial boundary for an ``(n, dim)`` array
        """
        points = self.as_points(points)
        if not _numpy.all(self.contains(points)):
            raise _error.ContractViolation(
                'points outside {!r}'.format(self))
        axes = list(self.spatial_axes)
        below = points[:, axes] - self.low[axes]
        above = self.high[axes] - points[:, axes]
        distance = _numpy.minimum(below, above).min(axis=1)
        return _numpy.maximum(distance, 0.0)

    def distance(self, x):
        """Distance of a single point (or a batch) to the spatial boundary
        """
        distances = self.distances(x)
        if distances.shape[0] == 1:
            return distances[0]
        return distances


class Interval (Domain):
    name = 'INTERVAL'
    spatial_axes = (0,)

    def __init__(self, a, b):
        super(Interval, self).__init__(bounds=[[a, b]])
        self.a = float(a)
        self.b = float(b)

    def as_points(self, x):
        if _numpy.ndim(x) <= 1:
            x = _numpy.reshape(_numpy.asarray(x, dtype=_numpy.float64),
                               (-1, 1))
        return super(Interval, self).as_points(x)


class Rect (Domain):
    name = 'RECT'
    spatial_axes = (0, 1)

    def __init__(self, x0, x1, y0, y1):
        super(Rect, self).__init__(bounds=[[x0, x1], [y0, y1]])


class SpaceTime (Domain):
    """One spatial axis (x) and one time axis (t)

    Only the faces ``x = x0`` and ``x = x1`` are boundary; the surface
    ``t = t0`` carries initial data as separate constraint sets.

    >>> float(SpaceTime(0, 1, 0, 1).distance([0.3, 0.0]))
    0.3
    """
    name = 'SPACETIME'
    spatial_axes = (0,)

    def __init__(self, x0, x1, t0, t1):
        super(SpaceTime, self).__init__(bounds=[[x0, x1], [t0, t1]])
        self.t0 = float(t0)


for _domain in [Interval, Rect, SpaceTime]:
    DOMAIN[_domain.name] = _domain
del _domain


class PointSet (object):
    """Sampled points with their role tag

    Tags are ``'interior'``, ``'boundary'`` and ``'initial'``.
    """
    tags = ('interior', 'boundary', 'initial')

    def __init__(self, points, tag):
        if tag not in self.tags:
            raise _error.ContractViolation('unknown point tag {!r}'.format(tag))
        self.points = _numpy.asarray(points, dtype=_numpy.float64)
        self.tag = tag

    def __repr__(self):
        return '<{}.{} {} n:{}>'.format(
            self.__module__, type(self).__name__, self.tag, len(self))

    def __len__(self):
        return self.points.shape[0]

    def concatenate(self, other):
        if other.tag != self.tag:
            raise _error.ContractViolation(
                'cannot join {} and {} points'.format(self.tag, other.tag))
        return PointSet(
            points=_numpy.concatenate([self.points, other.points]),
            tag=self.tag)


def _check_count(n):
    if int(n) != n or n < 1:
        raise _error.ContractViolation(
            'need at least one point, not {!r}'.format(n))
    return int(n)


def sample_uniform(domain, n, rng):
    """``n`` i.i.d. uniform points strictly inside the domain

    >>> import numpy
    >>> s = sample_uniform(Rect(0, 1, 0, 1), 7000, numpy.random.default_rng(0))
    >>> len(s), s.tag
    (7000, 'interior')
    >>> bool((Rect(0, 1, 0, 1).distances(s.points) > 0).all())
    True
    """
    n = _check_count(n)
    chunks = []
    count = 0
    while count < n:
        draw = rng.uniform(domain.low, domain.high,
                           size=(n - count, domain.dim))
        inside = _numpy.all((draw > domain.low) & (draw < domain.high),
                            axis=1)
        draw = draw[inside]
        chunks.append(draw)
        count += draw.shape[0]
    return PointSet(points=_numpy.concatenate(chunks)[:n], tag='interior')


def _latin_hypercube(n, rng):
    try:
        engine = _qmc.LatinHypercube(d=1, rng=rng)
    except TypeError:  # scipy < 1.15
        engine = _qmc.LatinHypercube(d=1, seed=rng)
    return engine.random(n=n)[:, 0]


def _edges(domain):
    (x0, x1), (y0, y1) = domain.bounds
    # (start, end) corners, traversed by the edge parameter s in [0, 1]
    return [
        ((x0, y0), (x1, y0)),
        ((x1, y0), (x1, y1)),
        ((x1, y1), (x0, y1)),
        ((x0, y1), (x0, y0)),
        ]


def sample_lhs_edges(rect, n_per_edge, rng):
    """One-dimensional Latin hypercube on each of the four edges

    >>> import numpy
    >>> square = Rect(0, 1, 0, 1)
    >>> s = sample_lhs_edges(square, 300, numpy.random.default_rng(1))
    >>> len(s), s.tag
    (1200, 'boundary')
    >>> float(square.distances(s.points).max())
    0.0
    >>> sample_lhs_edges(Interval(0, 1), 3, numpy.random.default_rng(1))
    Traceback (most recent call last):
      ...
    dualpinn.error.ConfigurationError: LHS edges need a Rect, not INTERVAL
    """
    if not isinstance(rect, Rect):
        raise _error.ConfigurationError(
            'LHS edges need a Rect, not {}'.format(rect.name))
    n_per_edge = _check_count(n_per_edge)
    chunks = []
    for start, end in _edges(rect):
        s = _latin_hypercube(n_per_edge, rng)
        start = _numpy.asarray(start)
        end = _numpy.asarray(end)
        points = start + s[:, None] * (end - start)
        # pin the constant coordinate exactly onto the edge
        for axis in range(2):
            if start[axis] == end[axis]:
                points[:, axis] = start[axis]
        chunks.append(points)
    return PointSet(points=_numpy.concatenate(chunks), tag='boundary')


def sample_boundary(domain, n, rng):
    """Dirichlet constraint points for any supported domain

    Rectangles get ``n`` LHS points per edge, intervals their two
    endpoints and space-time domains ``n`` LHS times on each spatial
    face.

    >>> import numpy
    >>> sample_boundary(Interval(-2.5, 2.5), 500, None).points.ravel().tolist()
    [-2.5, 2.5]
    """
    if isinstance(domain, Rect):
        return sample_lhs_edges(domain, n, rng)
    if isinstance(domain, Interval):
        return PointSet(points=[[domain.a], [domain.b]], tag='boundary')
    if isinstance(domain, SpaceTime):
        n = _check_count(n)
        (x0, x1), (t0, t1) = domain.bounds
        chunks = []
        for x in (x0, x1):
            t = t0 + _latin_hypercube(n, rng) * (t1 - t0)
            chunks.append(_numpy.column_stack([_numpy.full(n, x), t]))
        return PointSet(points=_numpy.concatenate(chunks), tag='boundary')
    raise _error.ConfigurationError(
        'no boundary sampler for {!r}'.format(domain))


def sample_ring(domain, n, delta, rng):
    """``n`` points with ``0 < d(x) < delta``, by rejection from uniform

    >>> import numpy
    >>> square = Rect(0, 1, 0, 1)
    >>> s = sample_ring(square, 8000, 0.1, numpy.random.default_rng(2))
    >>> bool((square.distances(s.points) < 0.1).all())
    True
    >>> sample_ring(square, 10, 0.5, numpy.random.default_rng(2))
    Traceback (most recent call last):
      ...
    dualpinn.error.ConfigurationError: ring width 0.5 must lie in (0, 0.5)
    """
    n = _check_count(n)
    inradius = domain.inradius()
    if not 0 < delta < inradius:
        raise _error.ConfigurationError(
            'ring width {} must lie in (0, {:g})'.format(delta, inradius))
    chunks = []
    count = 0
    while count < n:
        draw = sample_uniform(domain, max(n - count, 64), rng).points
        d = domain.distances(draw)
        draw = draw[(d > 0) & (d < delta)]
        chunks.append(draw)
        count += draw.shape[0]
    return PointSet(points=_numpy.concatenate(chunks)[:n], tag='interior')


def sample_initial(spacetime, n, rng):
    """``n`` points ``(x, t0)`` with ``x`` uniform in the open interval

    >>> import numpy
    >>> s = sample_initial(SpaceTime(0, 1, 0, 1), 500, numpy.random.default_rng(3))
    >>> len(s), bool((s.points[:, 1] == 0.0).all()), s.tag
    (500, True, 'initial')
    """
    if not isinstance(spacetime, SpaceTime):
        raise _error.ConfigurationError(
            'initial points need a SpaceTime domain, not {}'.format(
                spacetime.name))
    n = _check_count(n)
    (x0, x1), _ = spacetime.bounds
    space = Interval(x0, x1)
    x = sample_uniform(space, n, rng).points[:, 0]
    points = _numpy.column_stack([x, _numpy.full(n, spacetime.t0)])
    return PointSet(points=points, tag='initial')


def sample_residual_topk(domain, n, score, rng, pool_factor=4):
    """Keep the ``n`` uniform candidates with the largest ``score``

    ``score`` maps an ``(m, dim)`` array to ``m`` nonnegative numbers
    (typically ``|r|`` under the current networks).  Ties keep draw
    order.
    """
    n = _check_count(n)
    if pool_factor < 1:
        raise _error.ConfigurationError(
            'pool factor must be >= 1, not {}'.format(pool_factor))
    pool = sample_uniform(domain, int(_numpy.ceil(pool_factor * n)), rng)
    scores = _numpy.asarray(score(pool.points), dtype=_numpy.float64)
    order = _numpy.argsort(-scores, kind='stable')[:n]
    return PointSet(points=pool.points[_numpy.sort(order)], tag='interior')


def sample_focused(domain, n, delta, ring_fraction, rng,
                   residual_fraction=0.0, score=None, pool_factor=4):
    """Phase-2 mix of ring, residual-ranked and uniform points

    ``round(ring_fraction * n)`` ring points, then
    ``round(residual_fraction * n)`` top-residual points when a score
    is given, and uniform points for the rest.
    """
    n = _check_count(n)
    if not 0 <= ring_fraction <= 1 or not 0 <= residual_fraction <= 1 or \
            ring_fraction + residual_fraction > 1:
        raise _error.ConfigurationError(
            'invalid sampling fractions ring={} residual={}'.format(
                ring_fraction, residual_fraction))
    n_ring = int(round(ring_fraction * n))
    n_residual = 0
    if score is not None:
        n_residual = int(round(residual_fraction * n))
    n_uniform = n - n_ring - n_residual
    chunks = []
    if n_ring:
        chunks.append(sample_ring(domain, n_ring, delta, rng).points)
    if n_residual:
        chunks.append(sample_residual_topk(
            domain, n_residual, score, rng, pool_factor=pool_factor).points)
    if n_uniform > 0:
        chunks.append(sample_uniform(domain, n_uniform, rng).points)
    return PointSet(points=_numpy.concatenate(chunks), tag='interior')


def uniform_grid(domain, counts):
    """Tensor grid with ``counts[i]`` nodes spanning axis ``i`` inclusive
    """
    counts = list(counts)
    if len(counts) != domain.dim:
        raise _error.ContractViolation(
            'need {} grid counts, not {}'.format(domain.dim, counts))
    axes = [_numpy.linspace(low, high, count)
            for (low, high), count in zip(domain.bounds, counts)]
    mesh = _numpy.meshgrid(*axes, indexing='ij')
    return _numpy.column_stack([m.ravel() for m in mesh])


def boundary_grid(domain, n):
    """Deterministic dense boundary points (evaluation only)
    """
    if isinstance(domain, Interval):
        return _numpy.array([[domain.a], [domain.b]])
    s = _numpy.linspace(0.0, 1.0, n)
    if isinstance(domain, Rect):
        chunks = []
        for start, end in _edges(domain):
            start = _numpy.asarray(start)
            end = _numpy.asarray(end)
            chunks.append(start + s[:, None] * (end - start))
        return _numpy.concatenate(chunks)
    if isinstance(domain, SpaceTime):
        (x0, x1), (t0, t1) = domain.bounds
        t = t0 + s * (t1 - t0)
        return _numpy.concatenate([
            _numpy.column_stack([_numpy.full(n, x), t]) for x in (x0, x1)])
    raise _error.ConfigurationError(
        'no boundary grid for {!r}'.format(domain))


def default_delta(domain):
    """Ring width default: a tenth of the diameter, kept inside the inradius
    """
    return min(0.1 * domain.diameter(), 0.5 * domain.inradius())
