"""
Two straight cylinders: the closed-form disk-cylinder law integrated along the slave axis.
"""
import math
from dataclasses import dataclass

import numpy as np

from diskcyl.disk_cylinder import OptionTag, disk_cylinder_potential, prefactor_K_hat
from diskcyl.errors import DiskCylError, InputError, DomainError, PenetrationError, with_location
from diskcyl.geometry import PARALLEL_SIN, extract_config, scene_axes
from diskcyl.quadrature import axial_scheme, graded_rule


@dataclass(frozen=True)
class TwoCylinderResult:
    """ Total potential and the per-unit-length densities it was summed from. """
    total_potential: float
    per_point_samples: tuple
    weights: tuple
    option: OptionTag


def slave_disk_config(scene, s1):
    """ Disk-cylinder configuration of the slave cross-section at arc length s1 from the closest point. """
    center, t1, origin2, t2 = scene_axes(scene)
    return extract_config(center + s1 * t1, t1, scene.R1, origin2, t2, scene.R2)


def two_cylinder_potential(scene, option, law, materials, axial=None):
    """ Integrate the disk-cylinder law over the slave axis s1 in [-L/2, L/2].

    :param scene: (CylinderPairScene) Geometry
    :param option: (OptionTag or String) Expansion option of the disk-cylinder law
    :param law: (PowerLaw) Point-pair law
    :param materials: (MaterialPair) Densities
    :param axial: (QuadratureSpec) Slave-axis rule, graded toward s1 = 0
    :return: (TwoCylinderResult)
    """
    option = OptionTag.parse(option)
    axial = axial_scheme() if axial is None else axial
    half_length = 0.5 * scene.L_slave
    nodes, weights = graded_rule(-half_length, half_length, axial.at(0.0))

    samples = []
    for s1 in nodes:
        s1 = float(s1)
        try:
            density = disk_cylinder_potential(slave_disk_config(scene, s1), option, law, materials)
        except DiskCylError as error:
            raise with_location(error, 's1 = {!r}'.format(s1)) from error
        samples.append((s1, density))

    densities = np.array([density for _, density in samples])
    return TwoCylinderResult(total_potential=float(np.dot(weights, densities)),
                             per_point_samples=tuple(samples),
                             weights=tuple(float(w) for w in weights),
                             option=option)


def two_cylinder_potential_total(scene, option, materials, axial=None):
    """ Sum of two_cylinder_potential over every law of the material pair. """
    if not materials.laws:
        raise InputError('material pair defines no point-pair laws')
    return sum(two_cylinder_potential(scene, option, law, materials, axial).total_potential
               for law in materials.laws)


def analytic_reference_parallel(g, R1, R2, law, materials):
    """ Potential per unit length of two parallel cylinders at small surface gap g.

    :return: (float) K_hat_m rho1 sqrt(2 R1 R2 / (R1 + R2)) g^(9/2 - m)
    """
    if not g > 0:
        raise PenetrationError('surface gap must be positive, got g = {}'.format(g))
    return (prefactor_K_hat(law.m, law.k, materials.rho2) * materials.rho1
            * math.sqrt(2.0 * R1 * R2 / (R1 + R2)) * g ** (4.5 - law.m))


def analytic_reference_parallel_total(g, R1, R2, materials):
    return sum(analytic_reference_parallel(g, R1, R2, law, materials) for law in materials.laws)


def analytic_reference_skew_vdw(g, alpha, R1, R2, A_Ham):
    """ Van der Waals potential of two skew cylinders at small surface gap, -A sqrt(R1 R2) / (6 g sin(alpha)).

    :param g: (float) Bilateral surface gap
    :param alpha: (float) Mutual angle in (0, pi/2]
    :param R1: (float) Radius of the first cylinder
    :param R2: (float) Radius of the second cylinder
    :param A_Ham: (float) Hamaker constant
    :return: (float)
    """
    if not g > 0:
        raise PenetrationError('surface gap must be positive, got g = {}'.format(g))
    sin_alpha = math.sin(alpha)
    if not 0.0 <= alpha <= math.pi / 2 or sin_alpha < PARALLEL_SIN:
        raise DomainError('skew-cylinder law needs alpha in (0, pi/2], got alpha = {!r}'.format(alpha))
    return -A_Ham / 6.0 * math.sqrt(R1 * R2) / g / sin_alpha
