"""
Numerical reference solutions used to check the closed-form laws.
"""
from dataclasses import dataclass

import numpy as np

from diskcyl.errors import InputError, DomainError, PenetrationError, ConvergenceError
from diskcyl.geometry import scene_axes, unilateral_normal, disk_frame
from diskcyl.point_potentials import phi_point_pair, pot_point_halfspace
from diskcyl.quadrature import (QuadratureSpec, graded_rule, axial_scheme, cross_section_schemes,
                                brute_force_schemes)

TAIL_TOLERANCE = 1e-6
MAX_DOUBLINGS = 40


@dataclass(frozen=True)
class SlopeEstimate:
    slope: float
    intercept: float
    max_residual: float


def loglog_slope(xs, ys):
    """ Least-squares fit of log|y| = slope * log(x) + intercept.

    :param xs: (sequence) Positive abscissae
    :param ys: (sequence) Non-zero ordinates of one sign
    :return: (SlopeEstimate) Slope, intercept and largest residual in log units
    """
    xs = np.asarray(xs, dtype=float)
    ys = np.asarray(ys, dtype=float)
    if xs.shape != ys.shape or xs.ndim != 1:
        raise InputError('xs and ys must be 1D sequences of equal length')
    if len(xs) < 3:
        raise InputError('slope fit needs at least 3 points, got {}'.format(len(xs)))
    if not np.all(xs > 0):
        raise InputError('abscissae must be positive')
    if np.any(ys == 0) or not (np.all(ys > 0) or np.all(ys < 0)):
        raise DomainError('ordinates must be non-zero and of one sign')

    log_x, log_y = np.log(xs), np.log(np.abs(ys))
    slope, intercept = np.polyfit(log_x, log_y, 1)
    residual = np.max(np.abs(log_y - (slope * log_x + intercept)))
    return SlopeEstimate(float(slope), float(intercept), float(residual))


def ref_pot_two_cylinders_3d(scene, law, materials, axial=None, cross_y=None, cross_z=None):
    """ Two-cylinder potential by 3D quadrature of the point-half-space law over the slave volume.

    Every slave point interacts with the infinite master through the point-half-space law,
    evaluated at the exact point-to-surface distance. Cross-sections are integrated in the disk
    frame whose y-axis points away from the master, chords graded toward the near side.

    :param scene: (CylinderPairScene) Geometry
    :param law: (PowerLaw) Point-pair law
    :param materials: (MaterialPair) Densities
    :param axial: (QuadratureSpec) Rule along the slave axis, focus at the closest point
    :param cross_y: (QuadratureSpec) Rule on the unit interval across each chord
    :param cross_z: (QuadratureSpec) Rule on [-R1, R1] across the chords
    :return: (float) Total potential
    """
    axial = axial_scheme() if axial is None else axial
    if cross_y is None or cross_z is None:
        default_y, default_z = cross_section_schemes(scene.g_bl, scene.R1)
        cross_y = default_y if cross_y is None else cross_y
        cross_z = default_z if cross_z is None else cross_z

    center0, t1, origin2, t2 = scene_axes(scene)
    R1, R2 = scene.R1, scene.R2
    half_length = 0.5 * scene.L_slave

    s_nodes, s_weights = graded_rule(-half_length, half_length, axial.at(0.0))
    z_nodes, z_weights = graded_rule(-R1, R1, cross_z)
    xi_nodes, xi_weights = graded_rule(0.0, 1.0, cross_y)

    chord = np.sqrt(np.maximum(R1 ** 2 - z_nodes ** 2, 0.0))
    y_grid = -chord[:, None] + 2.0 * chord[:, None] * xi_nodes[None, :]
    z_grid = np.broadcast_to(z_nodes[:, None], y_grid.shape)
    w_grid = z_weights[:, None] * 2.0 * chord[:, None] * xi_weights[None, :]

    total = 0.0
    for s, w_s in zip(s_nodes, s_weights):
        center = center0 + s * t1
        n_ul, _ = unilateral_normal(center, origin2, t2)
        u1, v1 = disk_frame(t1, n_ul)
        points = center + y_grid[..., None] * u1 + z_grid[..., None] * v1
        rel = points - origin2
        radial = rel - (rel @ t2)[..., None] * t2
        gap = np.linalg.norm(radial, axis=-1) - R2
        if np.any(gap <= 0):
            raise PenetrationError('slave point inside the master cylinder at s1 = {!r}'.format(float(s)))
        total += w_s * float(np.sum(w_grid * pot_point_halfspace(gap, law, materials.rho2)))
    return materials.rho1 * total


def brute_force_point_cylinder(g, R, law, rho, specs=None, tail_tolerance=TAIL_TOLERANCE):
    """ Interaction of a point with an infinite cylinder by 3D quadrature of the point-pair law.

    The axial half-length starts at 10 (g + 2R) and is doubled until the last added slab
    contributes less than tail_tolerance of the total.

    :param g: (float) Point-to-surface gap
    :param R: (float) Cylinder radius
    :param law: (PowerLaw) Point-pair law
    :param rho: (float) Cylinder density
    :param specs: (tuple) Axial, lateral and radial QuadratureSpec (see brute_force_schemes)
    :param tail_tolerance: (float) Relative size of the last slab at which to stop
    :return: (float)
    """
    if not g > 0:
        raise PenetrationError('point-surface gap must be positive, got g = {}'.format(g))
    if not R > 0:
        raise InputError('cylinder radius must be positive, got R = {}'.format(R))
    axial, lateral, radial = brute_force_schemes(g, R) if specs is None else specs

    # cross-section coordinates: q lateral, p toward the point at height R + g
    q_nodes, q_weights = graded_rule(-R, R, lateral.at(0.0))
    xi_nodes, xi_weights = graded_rule(0.0, 1.0, radial)
    chord = np.sqrt(np.maximum(R ** 2 - q_nodes ** 2, 0.0))
    p_grid = -chord[:, None] + 2.0 * chord[:, None] * xi_nodes[None, :]
    w_grid = q_weights[:, None] * 2.0 * chord[:, None] * xi_weights[None, :]
    lateral_sq = q_nodes[:, None] ** 2 + (R + g - p_grid) ** 2

    def slab(x_lo, x_hi, spec):
        x_nodes, x_weights = graded_rule(x_lo, x_hi, spec.at(x_lo))
        value = 0.0
        for x, w_x in zip(x_nodes, x_weights):
            value += w_x * float(np.sum(w_grid * phi_point_pair(np.sqrt(x * x + lateral_sq), law)))
        return value

    half_length = 10.0 * (g + 2.0 * R)
    total = 2.0 * slab(0.0, half_length, axial)
    tail_spec = QuadratureSpec(8, axial.points_per_segment, 1.3)
    for _ in range(MAX_DOUBLINGS):
        tail = 2.0 * slab(half_length, 2.0 * half_length, tail_spec)
        total += tail
        half_length *= 2.0
        if abs(tail) < tail_tolerance * abs(total):
            return rho * total
    raise ConvergenceError('axial truncation did not converge, last slab {!r} of total {!r}'.format(tail, total))
