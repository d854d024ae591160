import math

import numpy as np
import pytest

from diskcyl.errors import InputError, NumericError
from diskcyl.quadrature import (QuadratureSpec, grading_ratio_for, segment_edges, graded_rule,
                                gauss_segment_integrate, axial_scheme, cross_section_schemes, brute_force_schemes)


def test_spec_validation():
    with pytest.raises(InputError):
        QuadratureSpec(0)
    with pytest.raises(InputError):
        QuadratureSpec(4, points_per_segment=0)
    with pytest.raises(InputError):
        QuadratureSpec(4, grading_ratio=0.9)
    assert QuadratureSpec(40, 5).total_points == 200


def test_refined():
    """ Refinement doubles the segments and keeps the overall grading. """
    spec = QuadratureSpec(10, 5, 1.44, focus=0.0)
    fine = spec.refined()
    assert fine.n_segments == 20
    assert fine.grading_ratio == pytest.approx(1.2)
    assert fine.focus == 0.0
    assert fine.points_per_segment == 5


def test_rule_is_exact_for_polynomials():
    """ p Gauss points per segment integrate polynomials of degree 2p - 1 exactly. """
    spec = QuadratureSpec(7, points_per_segment=2, grading_ratio=1.7)
    assert gauss_segment_integrate(lambda x: x ** 3, 0.0, 2.0, spec) == pytest.approx(4.0, rel=1e-13)
    spec = QuadratureSpec(5, points_per_segment=5, grading_ratio=1.3, focus=0.4)
    assert gauss_segment_integrate(lambda x: x ** 9 - x, -1.0, 1.0, spec) == pytest.approx(0.0, abs=1e-13)


def test_graded_rule_nodes_and_weights():
    spec = QuadratureSpec(12, 4, 1.5, focus=0.0)
    nodes, weights = graded_rule(-3.0, 5.0, spec)
    assert len(nodes) == len(weights) == spec.total_points
    assert np.all(np.diff(nodes) > 0)
    assert nodes[0] > -3.0 and nodes[-1] < 5.0
    assert np.sum(weights) == pytest.approx(8.0, rel=1e-14)
    with pytest.raises(InputError):
        graded_rule(1.0, 1.0, spec)


def test_segment_edges_grading():
    """ One-sided grading starts at the finest segment, two-sided grading places an edge at the focus. """
    spec = QuadratureSpec(6, 3, 2.0)
    edges = segment_edges(0.0, 63.0, spec)
    assert np.diff(edges) == pytest.approx([1.0, 2.0, 4.0, 8.0, 16.0, 32.0])

    edges = segment_edges(-10.0, 10.0, QuadratureSpec(40, 5, 1.3, focus=0.0))
    assert len(edges) == 41
    assert edges[20] == 0.0
    assert edges == pytest.approx(-edges[::-1])

    # focus at the upper end grades toward it
    edges = segment_edges(0.0, 1.0, QuadratureSpec(4, 2, 2.0, focus=1.0))
    widths = np.diff(edges)
    assert widths[-1] < widths[0]


def test_resolving_first_width():
    spec = QuadratureSpec.resolving(1e-3, 1.0, 10)
    widths = np.diff(segment_edges(0.0, 1.0, spec))
    assert widths[0] == pytest.approx(1e-3, rel=1e-8)
    assert widths[1] / widths[0] == pytest.approx(spec.grading_ratio)

    ratio = grading_ratio_for(0.01, 2.0, 8)
    assert 0.01 * (ratio ** 8 - 1.0) / (ratio - 1.0) == pytest.approx(2.0, rel=1e-10)
    assert grading_ratio_for(0.5, 2.0, 8) == 1.0


def test_scalar_integrand():
    """ Integrands that reject arrays are evaluated point by point. """
    value = gauss_segment_integrate(math.exp, 0.0, 1.0, QuadratureSpec(4, 5, 1.0))
    assert value == pytest.approx(math.e - 1.0, rel=1e-12)


def test_non_finite_integrand():
    with pytest.raises(NumericError):
        gauss_segment_integrate(lambda x: np.where(x > 0.5, np.nan, 1.0), 0.0, 1.0, QuadratureSpec(4))


def test_peaked_integrand_with_resolving_spec():
    """ A gap-resolving first segment integrates (x + g)^-2 accurately. """
    g = 1e-3
    spec = QuadratureSpec.resolving(0.1 * g, 1.0, 30)
    value = gauss_segment_integrate(lambda x: (x + g) ** -2, 0.0, 1.0, spec)
    assert value == pytest.approx(1.0 / g - 1.0 / (1.0 + g), rel=1e-6)


def test_default_schemes():
    axial = axial_scheme()
    assert (axial.n_segments, axial.points_per_segment, axial.grading_ratio, axial.focus) == (40, 5, 1.3, 0.0)

    cross_y, cross_z = cross_section_schemes(1e-3, 1.0)
    assert cross_y.n_segments == 16 and cross_z.n_segments == 12
    first_y = np.diff(segment_edges(0.0, 1.0, cross_y))[0]
    assert first_y == pytest.approx(0.25e-3, rel=1e-6)

    axial, lateral, radial = brute_force_schemes(1e-3, 1.0)
    assert axial.n_segments == lateral.n_segments == radial.n_segments == 24
    assert radial.focus == 1.0
