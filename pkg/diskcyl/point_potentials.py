import math
import numbers
import warnings
from dataclasses import dataclass

import numpy as np

from diskcyl.errors import InputError, DomainError, PenetrationError, UnsupportedError


@dataclass(frozen=True)
class PowerLaw:
    """ Point-pair law phi(r) = k * r**-m. A negative k is attractive. """
    m: int
    k: float

    def __post_init__(self):
        if isinstance(self.m, bool) or not isinstance(self.m, numbers.Integral):
            raise InputError('exponent m must be an integer, got {!r}'.format(self.m))
        if self.m < 6:
            raise DomainError('exponent m must be >= 6, got {}'.format(self.m))
        object.__setattr__(self, 'm', int(self.m))
        object.__setattr__(self, 'k', float(self.k))


@dataclass(frozen=True)
class MaterialPair:
    """ Point densities of slave (rho1) and master (rho2) and the pair laws acting between them. """
    rho1: float
    rho2: float
    laws: tuple = ()

    def __post_init__(self):
        if not (self.rho1 > 0 and self.rho2 > 0):
            raise InputError('densities must be positive, got rho1 = {}, rho2 = {}'.format(self.rho1, self.rho2))
        object.__setattr__(self, 'laws', tuple(self.laws))

    def law(self, m):
        """ Return the law with exponent m. """
        for law in self.laws:
            if law.m == m:
                return law
        raise DomainError('material pair has no law with exponent m = {}'.format(m))

    def hamaker_constant(self):
        """ Hamaker constant A = -pi^2 k6 rho1 rho2 of the m = 6 term (positive for attraction). """
        return -math.pi ** 2 * self.law(6).k * self.rho1 * self.rho2


def lennard_jones_laws(epsilon, sigma):
    """ Adhesive and repulsive terms of the 12-6 Lennard-Jones potential 4 eps ((s/r)^12 - (s/r)^6).

    :param epsilon: (float) Depth of the potential well
    :param sigma: (float) Distance at which the potential vanishes
    :return: (tuple) PowerLaw for m = 6 and m = 12
    """
    return PowerLaw(6, -4.0 * epsilon * sigma ** 6), PowerLaw(12, 4.0 * epsilon * sigma ** 12)


def _positive(value, error, what):
    arr = np.asarray(value, dtype=float)
    if not np.all(arr > 0):
        raise error('{} must be positive, got {}'.format(what, value))
    return arr


def phi_point_pair(r, law):
    """ Point-pair potential k * r^-m (scalar or array). """
    r = _positive(r, DomainError, 'distance r')
    value = law.k * np.power(r, -float(law.m))
    return float(value) if value.ndim == 0 else value


def prefactor_pt_hs(law, rho):
    """ K_{m,pt-hs} = 2 pi k rho / ((m-2)(m-3)). """
    return 2.0 * math.pi * law.k * rho / ((law.m - 2) * (law.m - 3))


def pot_point_halfspace(g, law, rho):
    """ Exact interaction of a point with a half-space of density rho at surface distance g.

    :param g: (float or np.ndarray) Point-to-surface gap
    :param law: (PowerLaw) Point-pair law
    :param rho: (float) Density of the half-space
    :return: (float or np.ndarray) K_{m,pt-hs} * g^(3-m)
    """
    g = _positive(g, PenetrationError, 'point-surface gap g')
    value = prefactor_pt_hs(law, rho) * np.power(g, 3.0 - law.m)
    return float(value) if value.ndim == 0 else value


def prefactor_pt_cyl(law, rho):
    """ Leading prefactor of the point-cylinder law (known in closed form for m = 6 and 12). """
    if law.m == 6:
        return math.pi ** 2 * law.k * rho / 8.0
    if law.m == 12:
        return 7.0 * math.pi ** 2 * law.k * rho / 256.0
    raise UnsupportedError('point-cylinder prefactor only known for m in (6, 12), got m = {}'.format(law.m))


def pot_point_cylinder_montgomery(g, R, law, rho, two_term=False):
    """ Point-cylinder series approximation, leading term or (m = 6) the first two terms.

    For exponents without a known prefactor the half-space law is returned instead.

    :param g: (float) Point-to-surface gap
    :param R: (float) Cylinder radius
    :param law: (PowerLaw) Point-pair law
    :param rho: (float) Density of the cylinder
    :param two_term: (bool) Add the far-side correction term (m = 6 only)
    :return: (float)
    """
    if not g > 0:
        raise PenetrationError('point-surface gap must be positive, got g = {}'.format(g))
    if not R > 0:
        raise InputError('cylinder radius must be positive, got R = {}'.format(R))
    if two_term and law.m != 6:
        raise UnsupportedError('two-term point-cylinder series only available for m = 6, got m = {}'.format(law.m))
    if law.m not in (6, 12):
        warnings.warn('no point-cylinder prefactor for m = {}, using the point-half-space law'.format(law.m))
        return pot_point_halfspace(g, law, rho)

    prefactor = prefactor_pt_cyl(law, rho)
    if two_term:
        return prefactor * (g ** -3 - (g + 2.0 * R) ** -3)
    return prefactor * g ** (3 - law.m)


def prefactor_ratio_pt_cyl_vs_hs(m):
    """ K_{m,pt-cyl} / K_{m,pt-hs}, independent of k and rho. """
    law = PowerLaw(m, 1.0)
    return prefactor_pt_cyl(law, 1.0) / prefactor_pt_hs(law, 1.0)
