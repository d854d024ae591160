import math

import numpy as np
import pytest

from diskcyl.errors import InputError, PenetrationError, DegenerateNormalError, ParallelSingularityError
from diskcyl.geometry import (DiskCylinderConfig, CylinderPairScene, as_unit, closest_point_on_line,
                              bilateral_closest_points, bilateral_normal, bilateral_angle, unilateral_normal,
                              extract_config, disk_frame)


def _random_unit(rng):
    vec = rng.normal(size=3)
    return vec / np.linalg.norm(vec)


def test_as_unit_rejects_non_unit():
    """ Direction vectors must be normalized and have three components. """
    with pytest.raises(InputError):
        as_unit([1.0, 1.0, 0.0])
    with pytest.raises(InputError):
        as_unit([1.0, 0.0])
    assert as_unit([0.0, 0.0, 1.0])[2] == 1.0


def test_closest_point_on_line():
    foot, distance = closest_point_on_line([1.0, 2.0, 3.0], [0.0, 0.0, 0.0], [1.0, 0.0, 0.0])
    assert foot == pytest.approx([1.0, 0.0, 0.0])
    assert distance == pytest.approx(math.sqrt(13.0))


def test_closest_point_on_line_degenerate_cases():
    """ A point on the line is its own foot point. """
    foot, distance = closest_point_on_line([1.0, 2.0, 5.5], [1.0, 2.0, 3.0], [0.0, 0.0, 1.0])
    assert foot == pytest.approx([1.0, 2.0, 5.5])
    assert distance == pytest.approx(0.0, abs=1e-12)

    foot, distance = closest_point_on_line([0.0, 1.0, 1.0], [0.0, 0.0, 0.0], [0.0, 0.0, 1.0])
    assert foot == pytest.approx([0.0, 0.0, 1.0])
    assert distance == pytest.approx(1.0)


def test_closest_point_residual_is_orthogonal():
    rng = np.random.default_rng(13)
    for _ in range(500):
        point = rng.uniform(-10.0, 10.0, size=3)
        origin = rng.uniform(-10.0, 10.0, size=3)
        direction = _random_unit(rng)
        foot, distance = closest_point_on_line(point, origin, direction)
        assert abs(np.dot(point - foot, direction)) < 1e-12 * max(distance, 1.0)
        assert distance == pytest.approx(np.linalg.norm(point - foot))


def test_bilateral_closest_points_skew_and_parallel():
    """ Skew lines give the mutual perpendicular, parallel lines fix s1 = 0. """
    p1, p2, s1, s2 = bilateral_closest_points([3.0, 0.0, 1.0], [1.0, 0.0, 0.0], [0.0, 0.0, 0.0], [0.0, 1.0, 0.0])
    assert s1 == pytest.approx(-3.0)
    assert s2 == pytest.approx(0.0)
    assert p1 == pytest.approx([0.0, 0.0, 1.0])
    assert p2 == pytest.approx([0.0, 0.0, 0.0])

    p1, p2, s1, s2 = bilateral_closest_points([0.0, 0.0, 2.0], [1.0, 0.0, 0.0], [5.0, 0.0, 0.0], [1.0, 0.0, 0.0])
    assert s1 == 0.0
    assert s2 == pytest.approx(-5.0)
    assert np.linalg.norm(p1 - p2) == pytest.approx(2.0)


def test_bilateral_normal():
    assert bilateral_normal([1.0, 0.0, 0.0], [0.0, 1.0, 0.0]) == pytest.approx([0.0, 0.0, 1.0])
    with pytest.raises(ParallelSingularityError):
        bilateral_normal([1.0, 0.0, 0.0], [-1.0, 0.0, 0.0])


def test_unilateral_normal_on_axis():
    """ A disk center on the cylinder axis has no unilateral normal. """
    with pytest.raises(DegenerateNormalError):
        unilateral_normal([2.0, 0.0, 0.0], [0.0, 0.0, 0.0], [1.0, 0.0, 0.0])
    n_ul, d_ul = unilateral_normal([2.0, 0.0, 3.0], [0.0, 0.0, 0.0], [1.0, 0.0, 0.0])
    assert n_ul == pytest.approx([0.0, 0.0, 1.0])
    assert d_ul == pytest.approx(3.0)


def test_extract_config_perpendicular_axes():
    config = extract_config([0.0, 0.0, 3.0], [1.0, 0.0, 0.0], 1.0, [0.0, 0.0, 0.0], [0.0, 1.0, 0.0], 1.0)
    assert config.d_ul == pytest.approx(3.0)
    assert config.alpha == pytest.approx(math.pi / 2)
    assert config.theta == pytest.approx(math.pi / 2)
    assert config.g_ul == pytest.approx(1.0)


def test_extract_config_mutual_angle():
    """ The mutual angle uses |t1.t2| and therefore stays within [0, pi/2]. """
    for angle in (0.0, 0.3, 1.2, math.pi - 0.3):
        t1 = [math.cos(angle), math.sin(angle), 0.0]
        config = extract_config([0.0, 0.0, 3.0], t1, 1.0, [0.0, 0.0, 0.0], [1.0, 0.0, 0.0], 1.0)
        assert config.alpha == pytest.approx(min(angle, math.pi - angle), abs=1e-12)


def test_extract_config_penetration():
    with pytest.raises(PenetrationError):
        extract_config([0.0, 0.0, 1.5], [1.0, 0.0, 0.0], 1.0, [0.0, 0.0, 0.0], [0.0, 1.0, 0.0], 1.0)


def _random_rotation(rng):
    q, r = np.linalg.qr(rng.normal(size=(3, 3)))
    q = q * np.sign(np.diag(r))
    if np.linalg.det(q) < 0:
        q[:, 0] = -q[:, 0]
    return q


def _random_disk_and_cylinder(rng):
    t1, t2 = _random_unit(rng), _random_unit(rng)
    radial = _random_unit(rng)
    radial -= np.dot(radial, t2) * t2
    radial /= np.linalg.norm(radial)
    center = rng.uniform(2.1, 5.0) * radial + rng.uniform(-3.0, 3.0) * t2
    return center, t1, t2


def test_extract_config_invariant_under_rigid_motion():
    rng = np.random.default_rng(17)
    for _ in range(200):
        center, t1, t2 = _random_disk_and_cylinder(rng)
        config = extract_config(center, t1, 1.0, np.zeros(3), t2, 1.0)
        rotation, shift = _random_rotation(rng), rng.uniform(-20.0, 20.0, size=3)
        moved = extract_config(rotation @ center + shift, rotation @ t1, 1.0, shift, rotation @ t2, 1.0)
        assert moved.d_ul == pytest.approx(config.d_ul, abs=1e-10)
        assert moved.alpha == pytest.approx(config.alpha, abs=1e-10)
        assert moved.theta == pytest.approx(config.theta, abs=1e-10)


def test_extract_config_under_sign_flips():
    """ Flipping t2 changes nothing, flipping t1 maps theta to pi - theta. """
    rng = np.random.default_rng(19)
    for _ in range(200):
        center, t1, t2 = _random_disk_and_cylinder(rng)
        config = extract_config(center, t1, 1.0, np.zeros(3), t2, 1.0)
        flipped_axis = extract_config(center, t1, 1.0, np.zeros(3), -t2, 1.0)
        assert flipped_axis.alpha == pytest.approx(config.alpha, abs=1e-12)
        assert flipped_axis.theta == pytest.approx(config.theta, abs=1e-12)

        flipped_normal = extract_config(center, -t1, 1.0, np.zeros(3), t2, 1.0)
        assert flipped_normal.alpha == pytest.approx(config.alpha, abs=1e-12)
        assert flipped_normal.theta == pytest.approx(math.pi - config.theta, abs=1e-12)
        assert flipped_normal.d_ul == config.d_ul


def test_consistency_of_extracted_angles():
    """ For any pair of vectors cos(theta) = sin(alpha) sin(vartheta), hence cos^2(theta) <= sin^2(alpha). """
    rng = np.random.default_rng(7)
    for _ in range(200):
        t1, t2 = _random_unit(rng), _random_unit(rng)
        center = rng.uniform(2.5, 6.0) * _random_unit(rng)
        n_ul, d_ul = unilateral_normal(center, [0.0, 0.0, 0.0], t2)
        if d_ul <= 2.0:
            continue
        config = extract_config(center, t1, 1.0, [0.0, 0.0, 0.0], t2, 1.0)
        assert math.cos(config.theta) ** 2 <= math.sin(config.alpha) ** 2 + 1e-12
        vartheta = bilateral_angle(t1, t2, n_ul)
        assert math.cos(config.theta) == pytest.approx(math.sin(config.alpha) * math.sin(vartheta), abs=1e-10)


def test_disk_frame_is_orthonormal():
    rng = np.random.default_rng(11)
    for _ in range(50):
        t1, n_ul = _random_unit(rng), _random_unit(rng)
        u1, v1 = disk_frame(t1, n_ul)
        assert np.dot(u1, t1) == pytest.approx(0.0, abs=1e-12)
        assert np.dot(v1, t1) == pytest.approx(0.0, abs=1e-12)
        assert np.dot(u1, v1) == pytest.approx(0.0, abs=1e-12)
        assert np.dot(u1, n_ul) >= 0.0

    # n_ul along the disk normal: any in-plane frame
    u1, v1 = disk_frame(np.array([0.0, 0.0, 1.0]), np.array([0.0, 0.0, 1.0]))
    assert np.linalg.norm(u1) == pytest.approx(1.0)
    assert u1[2] == pytest.approx(0.0)


def test_config_and_scene_validation():
    config = DiskCylinderConfig.from_gap(0.25, 0.5, 1.0, 1.0, 2.0)
    assert config.d_ul == pytest.approx(3.25)
    assert config.g_ul == pytest.approx(0.25)
    with pytest.raises(InputError):
        DiskCylinderConfig.from_gap(0.25, 2.0, 1.0, 1.0, 1.0)
    with pytest.raises(InputError):
        DiskCylinderConfig.from_gap(0.25, 0.5, 1.0, 0.0, 1.0)

    scene = CylinderPairScene(g_bl=0.5, alpha=0.2, R1=1.0, R2=1.5, L_slave=20.0)
    assert scene.d_bl == pytest.approx(3.0)
    assert scene.slenderness == pytest.approx(20.0)
    with pytest.raises(PenetrationError):
        CylinderPairScene(g_bl=0.0, alpha=0.2, R1=1.0, R2=1.0, L_slave=20.0)
    with pytest.raises(InputError):
        CylinderPairScene(g_bl=0.1, alpha=0.2, R1=1.0, R2=1.0, L_slave=-1.0)
