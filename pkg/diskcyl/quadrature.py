import math
from dataclasses import dataclass, replace
from functools import lru_cache
from typing import Optional

import numpy as np
from numpy.polynomial.legendre import leggauss
from scipy.optimize import brentq

from diskcyl.errors import InputError, NumericError

MAX_POINTS_PER_SEGMENT = 64


@dataclass(frozen=True)
class QuadratureSpec:
    """ Composite Gauss-Legendre rule on geometrically graded segments.

    Segment widths grow by grading_ratio away from focus. With focus None the segments are
    graded away from the lower integration limit; a focus inside the interval grades both sides.
    """
    n_segments: int
    points_per_segment: int = 5
    grading_ratio: float = 1.3
    focus: Optional[float] = None

    def __post_init__(self):
        if int(self.n_segments) != self.n_segments or self.n_segments < 1:
            raise InputError('n_segments must be a positive integer, got {}'.format(self.n_segments))
        if not 1 <= self.points_per_segment <= MAX_POINTS_PER_SEGMENT:
            raise InputError('points_per_segment must lie in [1, {}], got {}'.format(
                MAX_POINTS_PER_SEGMENT, self.points_per_segment))
        if not self.grading_ratio >= 1.0:
            raise InputError('grading_ratio must be >= 1, got {}'.format(self.grading_ratio))

    @property
    def total_points(self):
        return self.n_segments * self.points_per_segment

    def refined(self):
        """ Split every segment in two: twice the segments with the square root of the ratio. """
        return replace(self, n_segments=2 * self.n_segments, grading_ratio=math.sqrt(self.grading_ratio))

    def at(self, focus):
        return replace(self, focus=focus)

    @classmethod
    def resolving(cls, first_width, span, n_graded, points_per_segment=5, n_segments=None, focus=None):
        """ Spec whose finest segment has width first_width.

        :param first_width: (float) Width of the segment next to the focus
        :param span: (float) Distance from the focus to the far end of a graded side
        :param n_graded: (int) Number of segments on that side
        :param points_per_segment: (int) Gauss points per segment
        :param n_segments: (int) Total segments, defaults to n_graded (one-sided grading)
        :param focus: (float) Focus coordinate
        :return: (QuadratureSpec)
        """
        n_segments = n_graded if n_segments is None else n_segments
        ratio = grading_ratio_for(first_width, span, n_graded)
        return cls(n_segments=n_segments, points_per_segment=points_per_segment,
                   grading_ratio=ratio, focus=focus)


def grading_ratio_for(first_width, span, n_graded):
    """ Geometric ratio r so that n_graded segments starting at first_width fill span. """
    if not (first_width > 0 and span > 0):
        raise InputError('first_width and span must be positive, got {} and {}'.format(first_width, span))
    if n_graded == 1 or first_width * n_graded >= span:
        return 1.0

    def log_first_width(ratio):
        return (math.log(span) + math.log(ratio - 1.0)
                - n_graded * math.log(ratio) - math.log1p(-ratio ** -n_graded))

    target = math.log(first_width)
    high = 2.0
    while log_first_width(high) > target:
        high *= 2.0
    return brentq(lambda r: log_first_width(r) - target, 1.0 + 1e-12, high, xtol=1e-14)


@lru_cache(maxsize=None)
def _reference_rule(points):
    return leggauss(points)


def _graded_offsets(length, n, ratio):
    """ Cumulative offsets 0 .. length of n geometric widths, finest first. """
    i = np.arange(n + 1, dtype=float)
    if ratio == 1.0:
        return length * i / n
    offsets = length * np.expm1(i * math.log(ratio)) / math.expm1(n * math.log(ratio))
    offsets[-1] = length
    return offsets


def segment_edges(a, b, spec):
    """ Ascending segment boundaries of spec on [a, b]. """
    focus = a if spec.focus is None else min(max(spec.focus, a), b)
    n, ratio = spec.n_segments, spec.grading_ratio
    left, right = focus - a, b - focus

    if left <= 0 or right <= 0 or n == 1:
        if right >= left:
            return a + _graded_offsets(b - a, n, ratio)
        return b - _graded_offsets(b - a, n, ratio)[::-1]

    n_left = int(round(n * left / (b - a)))
    n_left = min(max(n_left, 1), n - 1)
    left_edges = focus - _graded_offsets(left, n_left, ratio)[::-1]
    right_edges = focus + _graded_offsets(right, n - n_left, ratio)
    left_edges[0] = a
    right_edges[-1] = b
    return np.concatenate([left_edges, right_edges[1:]])


def graded_rule(a, b, spec):
    """ Nodes and weights of the composite rule on [a, b], ascending.

    :param a: (float) Lower limit
    :param b: (float) Upper limit, b > a
    :param spec: (QuadratureSpec) Rule description
    :return: (tuple) nodes, weights (np.ndarray)
    """
    if not b > a:
        raise InputError('integration limits must satisfy a < b, got [{}, {}]'.format(a, b))
    edges = segment_edges(a, b, spec)
    ref_x, ref_w = _reference_rule(spec.points_per_segment)
    mid = 0.5 * (edges[1:] + edges[:-1])
    half = 0.5 * (edges[1:] - edges[:-1])
    nodes = (mid[:, None] + half[:, None] * ref_x[None, :]).ravel()
    weights = (half[:, None] * ref_w[None, :]).ravel()
    return nodes, weights


def _evaluate(f, nodes):
    try:
        values = np.asarray(f(nodes), dtype=float)
    except TypeError:
        values = None
    if values is None or values.shape != nodes.shape:
        values = np.array([float(f(x)) for x in nodes])
    return values


def gauss_segment_integrate(f, a, b, spec):
    """ Integrate f over [a, b] with the composite graded Gauss-Legendre rule.

    f is called once with the array of all abscissae; functions that only accept scalars are
    evaluated point by point.

    :param f: (callable) Integrand
    :param a: (float) Lower limit
    :param b: (float) Upper limit
    :param spec: (QuadratureSpec) Rule description
    :return: (float) Approximation of the integral
    """
    nodes, weights = graded_rule(a, b, spec)
    values = _evaluate(f, nodes)
    bad = ~np.isfinite(values)
    if np.any(bad):
        raise NumericError('integrand not finite at x = {!r}'.format(float(nodes[np.argmax(bad)])))
    return float(np.dot(weights, values))


# ---- default schemes

def axial_scheme(n_segments=40, points_per_segment=5, grading_ratio=1.3):
    """ Slave-axis rule, graded toward the bilateral closest point s1 = 0. """
    return QuadratureSpec(n_segments, points_per_segment, grading_ratio, focus=0.0)


def cross_section_schemes(gap, R1, n_y=16, n_z=12, points_per_segment=5):
    """ Disk cross-section rules adapted to the surface gap.

    The y-rule lives on the unit interval (scaled to each chord) and is graded toward the near
    side, the z-rule on [-R1, R1] is graded toward the center.

    :return: (tuple) cross_y, cross_z
    """
    cross_y = QuadratureSpec.resolving(min(0.5 * gap, R1) / (2.0 * R1), 1.0, n_y,
                                       points_per_segment, focus=0.0)
    n_side = max(n_z // 2, 1)
    cross_z = QuadratureSpec.resolving(0.5 * math.sqrt(gap * R1), R1, n_side, points_per_segment,
                                       n_segments=n_z, focus=0.0)
    return cross_y, cross_z


def brute_force_schemes(gap, R, n_segments=24, points_per_segment=5):
    """ Axial, lateral and radial rules for integrating over a cylinder seen from a nearby point.

    :return: (tuple) axial (on [0, X]), lateral (on [-R, R]), radial (unit interval, graded to 1)
    """
    width = 0.5 * gap
    axial = QuadratureSpec.resolving(width, 10.0 * (gap + 2.0 * R), n_segments, points_per_segment, focus=0.0)
    lateral = QuadratureSpec.resolving(width, R, n_segments // 2, points_per_segment,
                                       n_segments=n_segments, focus=0.0)
    radial = QuadratureSpec.resolving(min(width, R) / (2.0 * R), 1.0, n_segments, points_per_segment, focus=1.0)
    return axial, lateral, radial
