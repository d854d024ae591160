"""
Closed-form interaction potential between a disk and an infinite cylinder.

The disk is a cross-section of the slave fiber, the cylinder stands for the master fiber. The
squared distance of a disk point (y1, z1) from the master axis is expanded around the disk
point y1 = -R1 on the in-plane direction u1. The options differ in the choice of u1:

    A       bilateral normal n_bl (undefined for parallel axes)
    B       unilateral normal projected onto the disk plane (undefined for sin(theta) = 0)
    C       unilateral normal n_ul, with beta = d_ul - R1
    Csimp   option C with d_ul - R1 replaced by R2, the reduced law used by default
"""
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np
from scipy.special import gammaln

from diskcyl.errors import (InputError, PenetrationError, ParallelSingularityError,
                            ProjectionSingularityError, InconsistentConfigurationError,
                            InvalidConfigurationError, DivergentIntegralError, UnsupportedError)
from diskcyl.geometry import PARALLEL_SIN, as_unit, bilateral_normal
from diskcyl.point_potentials import PowerLaw, prefactor_pt_hs

# Absolute slack on cos^2(theta) <= sin^2(alpha)
CONSISTENCY_SLACK = 1e-12


class OptionTag(Enum):
    A = 'A'
    B = 'B'
    C = 'C'
    C_SIMPLIFIED = 'Csimp'

    @classmethod
    def parse(cls, value):
        """ Accept an OptionTag or one of the names 'A', 'B', 'C', 'Csimp' (case-insensitive). """
        if isinstance(value, cls):
            return value
        key = str(value).strip().lower()
        for tag in cls:
            if key in (tag.value.lower(), tag.name.lower()):
                return tag
        raise InputError('unknown option {!r}, available options: {}'.format(
            value, ', '.join(tag.value for tag in cls)))


DEFAULT_OPTION = OptionTag.C_SIMPLIFIED


@dataclass(frozen=True)
class PolynomialCoefficients:
    """ Squared distance of the disk point (y, z) from the master axis:
    c + b_y y + b_z z + a_y y^2 + a_z z^2 + a_yz y z
    """
    a_y: float
    a_z: float
    a_yz: float
    b_y: float
    b_z: float
    c: float


@dataclass(frozen=True)
class AuxVariables:
    beta: float
    b_y_t: float
    b_z_t: float
    a_z_t: float
    c_t: float
    Delta: float


def _trig(config):
    return (math.cos(config.alpha), math.sin(config.alpha),
            math.cos(config.theta), math.sin(config.theta))


def _check_consistent(cos_theta, sin_alpha):
    if cos_theta ** 2 > sin_alpha ** 2 + CONSISTENCY_SLACK:
        raise InconsistentConfigurationError(
            'cos^2(theta) = {!r} exceeds sin^2(alpha) = {!r}'.format(cos_theta ** 2, sin_alpha ** 2))


def coefficients(config, option):
    """ Quadratic distance coefficients of options A and B in terms of the scalar angles.

    :param config: (DiskCylinderConfig) Relative configuration
    :param option: (OptionTag or String) A or B
    :return: (PolynomialCoefficients)
    """
    option = OptionTag.parse(option)
    cos_a, sin_a, cos_t, sin_t = _trig(config)
    d = config.d_ul

    if option is OptionTag.A:
        if sin_a < PARALLEL_SIN:
            raise ParallelSingularityError(
                'option A undefined for parallel configuration (sin alpha = {!r})'.format(sin_a))
        _check_consistent(cos_t, sin_a)
        ratio = max(0.0, 1.0 - cos_t ** 2 / sin_a ** 2)
        return PolynomialCoefficients(a_y=1.0, a_z=cos_a ** 2, a_yz=0.0,
                                      b_y=2.0 * d * math.sqrt(ratio),
                                      b_z=2.0 * d * cos_t * cos_a / sin_a,
                                      c=d ** 2)

    if option is OptionTag.B:
        if sin_t < PARALLEL_SIN:
            raise ProjectionSingularityError(
                'option B undefined when the unilateral normal is parallel to the disk normal '
                '(sin theta = {!r})'.format(sin_t))
        _check_consistent(cos_t, sin_a)
        root = math.sqrt(max(0.0, sin_a ** 2 - cos_t ** 2))
        return PolynomialCoefficients(a_y=1.0 - cos_a ** 2 * cos_t ** 2 / sin_t ** 2,
                                      a_z=cos_a ** 2 / sin_t ** 2,
                                      a_yz=-2.0 * cos_a * cos_t * root / sin_t ** 2,
                                      b_y=2.0 * d * sin_t,
                                      b_z=0.0,
                                      c=d ** 2)

    raise UnsupportedError('angle-form coefficients exist for options A and B only, got {}'.format(option.value))


def coefficients_from_vectors(t1, t2, n_ul, d_ul, option):
    """ Quadratic distance coefficients evaluated directly from the direction vectors.

    u1 is the option's expansion direction and v1 = t1 x u1. For option A the bilateral normal
    is oriented toward n_ul, so b_y >= 0 as in the angle form. The sign of the pair (a_yz, b_z)
    may differ from the angle form, which corresponds to the reflection z1 -> -z1.
    """
    option = OptionTag.parse(option)
    t1, t2, n_ul = as_unit(t1, 't1'), as_unit(t2, 't2'), as_unit(n_ul, 'n_ul')

    if option is OptionTag.A:
        u1 = bilateral_normal(t1, t2)
        if np.dot(u1, n_ul) < 0:
            u1 = -u1
    elif option is OptionTag.B:
        projected = n_ul - np.dot(n_ul, t1) * t1
        norm = np.linalg.norm(projected)
        if norm < PARALLEL_SIN:
            raise ProjectionSingularityError('n_ul is parallel to the disk normal')
        u1 = projected / norm
    else:
        u1 = n_ul
    v1 = np.cross(t1, u1)

    u_t2 = float(np.dot(u1, t2))
    v_t2 = float(np.dot(v1, t2))
    return PolynomialCoefficients(a_y=1.0 - u_t2 ** 2,
                                  a_z=1.0 - v_t2 ** 2,
                                  a_yz=-2.0 * u_t2 * v_t2,
                                  b_y=2.0 * d_ul * float(np.dot(n_ul, u1)),
                                  b_z=2.0 * d_ul * float(np.dot(n_ul, v1)),
                                  c=d_ul ** 2)


def _aux_from_coefficients(coeffs, config):
    R1, R2, d = config.R1, config.R2, config.d_ul
    # c - b_y R1 + a_y R1^2, regrouped around (d - R1)^2
    beta_sq = (d - R1) ** 2 + R1 * (2.0 * d - coeffs.b_y) - (1.0 - coeffs.a_y) * R1 ** 2
    if beta_sq <= 0:
        raise InvalidConfigurationError('expansion point distance vanishes (beta^2 = {!r})'.format(beta_sq))
    beta = math.sqrt(beta_sq)

    b_y_t = (coeffs.b_y - 2.0 * coeffs.a_y * R1) / (2.0 * beta)
    if b_y_t <= 0:
        raise DivergentIntegralError('y-integral diverges, b_y_t = {!r} <= 0'.format(b_y_t))
    b_z_t = (coeffs.b_z - coeffs.a_yz * R1) / (2.0 * beta)
    a_z_t = b_y_t / (2.0 * R1) + coeffs.a_z / (2.0 * beta) - b_z_t ** 2 / (2.0 * beta)
    c_t = beta - R2
    return AuxVariables(beta=beta, b_y_t=b_y_t, b_z_t=b_z_t, a_z_t=a_z_t, c_t=c_t,
                        Delta=4.0 * a_z_t * c_t - b_z_t ** 2)


def _aux_option_c(config, simplified):
    cos_a = math.cos(config.alpha)
    beta = config.d_ul - config.R1
    a_z_t = 1.0 / (2.0 * config.R1) + cos_a ** 2 / (2.0 * (config.R2 if simplified else beta))
    g_ul = config.g_ul
    return AuxVariables(beta=beta, b_y_t=1.0, b_z_t=0.0, a_z_t=a_z_t, c_t=g_ul, Delta=4.0 * a_z_t * g_ul)


def aux_variables(config, option):
    """ Auxiliary variables beta, b_y_t, b_z_t, a_z_t, c_t and Delta of the reduced law.

    :param config: (DiskCylinderConfig) Relative configuration
    :param option: (OptionTag or String) Expansion option
    :return: (AuxVariables)
    """
    option = OptionTag.parse(option)
    if config.g_ul <= 0:
        raise PenetrationError('disk and cylinder overlap: g_ul = {!r}'.format(config.g_ul))

    if option in (OptionTag.A, OptionTag.B):
        aux = _aux_from_coefficients(coefficients(config, option), config)
    else:
        aux = _aux_option_c(config, simplified=option is OptionTag.C_SIMPLIFIED)

    if not aux.Delta > 0:
        raise InvalidConfigurationError(
            'negative discriminant Delta = {!r} for option {}'.format(aux.Delta, option.value))
    return aux


def prefactor_K_generic(m, k, rho2):
    """ K_m = K_{m,pt-hs} / (m - 4) * sqrt(pi) * Gamma(m - 9/2) / Gamma(m - 4) * 2^(2m - 9), any m >= 6. """
    law = PowerLaw(m, k)
    gamma_ratio = math.exp(gammaln(m - 4.5) - gammaln(m - 4.0))
    return prefactor_pt_hs(law, rho2) / (m - 4) * math.sqrt(math.pi) * gamma_ratio * 2.0 ** (2 * m - 9)


def prefactor_K(m, k, rho2):
    """ Prefactor K_m of the disk-cylinder law, tabulated for m = 6 and m = 12.

    :param m: (int) Exponent, m >= 6
    :param k: (float) Signed point-pair prefactor
    :param rho2: (float) Master density
    :return: (float)
    """
    law = PowerLaw(m, k)
    if law.m == 6:
        return math.pi ** 2 * law.k * rho2 / 3.0
    if law.m == 12:
        return 286.0 * math.pi ** 2 * law.k * rho2 / 15.0
    return prefactor_K_generic(law.m, law.k, rho2)


def prefactor_K_hat(m, k, rho2):
    """ K_hat_m = 4^(9/2 - m) K_m. """
    return 4.0 ** (4.5 - m) * prefactor_K(m, k, rho2)


def disk_cylinder_potential(config, option, law, materials):
    """ Interaction potential per unit slave length of a disk and an infinite cylinder.

    :param config: (DiskCylinderConfig) Relative configuration
    :param option: (OptionTag or String) Expansion option
    :param law: (PowerLaw) Point-pair law
    :param materials: (MaterialPair) Densities (rho1 of the disk, rho2 of the cylinder)
    :return: (float) Potential per unit length
    """
    option = OptionTag.parse(option)
    g_ul = config.g_ul
    if g_ul <= 0:
        raise PenetrationError('disk and cylinder overlap: g_ul = {!r}'.format(g_ul))
    exponent = 4.5 - law.m

    if option is OptionTag.C_SIMPLIFIED:
        R1, R2 = config.R1, config.R2
        cos_a = math.cos(config.alpha)
        return (prefactor_K_hat(law.m, law.k, materials.rho2) * materials.rho1
                * math.sqrt(2.0 * R1 * R2 / (R1 * cos_a ** 2 + R2)) * g_ul ** exponent)

    aux = aux_variables(config, option)
    K = prefactor_K(law.m, law.k, materials.rho2)
    if option is OptionTag.C:
        return materials.rho1 * K * aux.a_z_t ** -0.5 * (4.0 * g_ul) ** exponent
    return materials.rho1 * K / aux.b_y_t * aux.a_z_t ** (law.m - 5) * aux.Delta ** exponent


def disk_cylinder_potential_total(config, option, materials):
    """ Sum of disk_cylinder_potential over every law of the material pair (e.g. full Lennard-Jones). """
    if not materials.laws:
        raise InputError('material pair defines no point-pair laws')
    return sum(disk_cylinder_potential(config, option, law, materials) for law in materials.laws)
