import math
from dataclasses import dataclass

import numpy as np

from diskcyl.errors import (InputError, PenetrationError, DegenerateNormalError,
                            ParallelSingularityError)

# Normalization tolerance for direction vectors
UNIT_TOLERANCE = 1e-12
# |sin(alpha)| below this counts as parallel
PARALLEL_SIN = 1e-9


def as_vec3(value, name='vector'):
    """ Convert a sequence of three numbers into a float numpy array.

    :param value: (sequence) Three components
    :param name: (String) Name used in error messages
    :return: (np.ndarray) Array of shape (3,)
    """
    vec = np.asarray(value, dtype=float)
    if vec.shape != (3,):
        raise InputError('{} must have three components, got shape {}'.format(name, vec.shape))
    if not np.all(np.isfinite(vec)):
        raise InputError('{} has non-finite components: {}'.format(name, vec))
    return vec


def as_unit(value, name='direction'):
    """ Like as_vec3 but also require |value| = 1 within UNIT_TOLERANCE. """
    vec = as_vec3(value, name)
    norm = np.linalg.norm(vec)
    if abs(norm - 1.0) > UNIT_TOLERANCE:
        raise InputError('{} must be a unit vector, |{}| = {!r}'.format(name, name, norm))
    return vec


@dataclass(frozen=True)
class DiskCylinderConfig:
    """ Relative configuration of a disk (slave cross-section) and an infinite cylinder (master).

    d_ul is the distance from the disk center to the cylinder axis, alpha the mutual angle of
    disk normal and cylinder axis and theta the angle between disk normal and unilateral normal.
    """
    d_ul: float
    alpha: float
    theta: float
    R1: float
    R2: float

    def __post_init__(self):
        if not (self.R1 > 0 and self.R2 > 0):
            raise InputError('radii must be positive, got R1 = {}, R2 = {}'.format(self.R1, self.R2))
        if not self.d_ul >= 0:
            raise InputError('d_ul must be non-negative, got {}'.format(self.d_ul))
        if not 0.0 <= self.alpha <= math.pi / 2:
            raise InputError('alpha must lie in [0, pi/2], got {}'.format(self.alpha))
        if not 0.0 <= self.theta <= math.pi:
            raise InputError('theta must lie in [0, pi], got {}'.format(self.theta))

    @classmethod
    def from_gap(cls, g_ul, alpha, theta, R1, R2):
        return cls(d_ul=g_ul + R1 + R2, alpha=alpha, theta=theta, R1=R1, R2=R2)

    @property
    def g_ul(self):
        return self.d_ul - self.R1 - self.R2


@dataclass(frozen=True)
class CylinderPairScene:
    """ Two straight cylinders: the slave of length L_slave and an infinite master.

    The slave is centered at the bilateral closest point of the two axes.
    """
    g_bl: float
    alpha: float
    R1: float
    R2: float
    L_slave: float

    def __post_init__(self):
        if not (self.R1 > 0 and self.R2 > 0):
            raise InputError('radii must be positive, got R1 = {}, R2 = {}'.format(self.R1, self.R2))
        if not self.L_slave > 0:
            raise InputError('slave length must be positive, got {}'.format(self.L_slave))
        if not 0.0 <= self.alpha <= math.pi / 2:
            raise InputError('alpha must lie in [0, pi/2], got {}'.format(self.alpha))
        if not self.g_bl > 0:
            raise PenetrationError('bilateral gap must be positive, got g_bl = {}'.format(self.g_bl))

    @property
    def d_bl(self):
        return self.g_bl + self.R1 + self.R2

    @property
    def slenderness(self):
        return self.L_slave / self.R1


def closest_point_on_line(point, line_origin, line_dir):
    """ Orthogonal projection of a point onto a straight line.

    :param point: (array-like) Point to project
    :param line_origin: (array-like) Any point on the line
    :param line_dir: (array-like) Unit direction of the line
    :return: (tuple) Foot point (np.ndarray) and distance (float)
    """
    point = as_vec3(point, 'point')
    line_origin = as_vec3(line_origin, 'line_origin')
    line_dir = as_unit(line_dir, 'line_dir')
    foot = line_origin + np.dot(point - line_origin, line_dir) * line_dir
    return foot, float(np.linalg.norm(point - foot))


def bilateral_closest_points(origin1, dir1, origin2, dir2):
    """ Mutually closest points of two straight lines.

    For parallel lines the first line parameter is fixed to 0.

    :return: (tuple) p1, p2, s1, s2 with p_i = origin_i + s_i * dir_i
    """
    origin1, origin2 = as_vec3(origin1, 'origin1'), as_vec3(origin2, 'origin2')
    dir1, dir2 = as_unit(dir1, 'dir1'), as_unit(dir2, 'dir2')
    offset = origin1 - origin2
    b = np.dot(dir1, dir2)
    d = np.dot(dir1, offset)
    e = np.dot(dir2, offset)
    denom = 1.0 - b * b
    if denom < PARALLEL_SIN ** 2:
        s1, s2 = 0.0, e
    else:
        s1 = (b * e - d) / denom
        s2 = (e - b * d) / denom
    return origin1 + s1 * dir1, origin2 + s2 * dir2, float(s1), float(s2)


def bilateral_normal(t1, t2):
    """ Unit normal t1 x t2 / |t1 x t2| shared by two skew directions. """
    cross = np.cross(as_unit(t1, 't1'), as_unit(t2, 't2'))
    sin_alpha = np.linalg.norm(cross)
    if sin_alpha < PARALLEL_SIN:
        raise ParallelSingularityError(
            'bilateral normal undefined for parallel axes (sin alpha = {!r})'.format(sin_alpha))
    return cross / sin_alpha


def bilateral_angle(t1, t2, n_ul):
    """ Signed angle from the bilateral normal to n_ul, measured about t2.

    With this sign convention cos(theta) = sin(alpha) * sin(angle) holds exactly.
    """
    n_bl = bilateral_normal(t1, t2)
    n_ul = as_unit(n_ul, 'n_ul')
    side = np.cross(as_unit(t2, 't2'), n_bl)
    return math.atan2(np.dot(n_ul, side), np.dot(n_ul, n_bl))


def unilateral_normal(disk_center, cyl_origin, cyl_axis):
    """ Unit vector from the closest axis point to the disk center and the distance d_ul. """
    foot, d_ul = closest_point_on_line(disk_center, cyl_origin, cyl_axis)
    if d_ul == 0.0:
        raise DegenerateNormalError('disk center {} lies on the cylinder axis'.format(list(disk_center)))
    return (as_vec3(disk_center) - foot) / d_ul, d_ul


def extract_config(disk_center, t1, R1, cyl_origin, t2, R2):
    """ Reduce vector data of a disk and an infinite cylinder to a DiskCylinderConfig.

    Angles are recovered with atan2 from the sine and cosine, which keeps them inside their
    intervals and accurate near the parallel and perpendicular cases.

    :param disk_center: (array-like) Center of the disk
    :param t1: (array-like) Unit disk normal (slave tangent)
    :param R1: (float) Disk radius
    :param cyl_origin: (array-like) Point on the cylinder axis
    :param t2: (array-like) Unit cylinder axis
    :param R2: (float) Cylinder radius
    :return: (DiskCylinderConfig)
    """
    t1, t2 = as_unit(t1, 't1'), as_unit(t2, 't2')
    n_ul, d_ul = unilateral_normal(disk_center, cyl_origin, t2)
    if d_ul <= R1 + R2:
        raise PenetrationError('disk and cylinder overlap: d_ul = {!r} <= R1 + R2 = {!r}'.format(d_ul, R1 + R2))

    cos_alpha = min(abs(float(np.dot(t1, t2))), 1.0)
    sin_alpha = min(float(np.linalg.norm(np.cross(t1, t2))), 1.0)
    cos_theta = float(np.clip(np.dot(t1, n_ul), -1.0, 1.0))
    sin_theta = min(float(np.linalg.norm(np.cross(t1, n_ul))), 1.0)

    return DiskCylinderConfig(d_ul=d_ul,
                              alpha=math.atan2(sin_alpha, cos_alpha),
                              theta=math.atan2(sin_theta, cos_theta),
                              R1=R1, R2=R2)


def scene_axes(scene):
    """ Axes of a CylinderPairScene in a fixed frame.

    The master axis is the x-axis, the slave axis runs along (cos alpha, sin alpha, 0) through
    (0, 0, d_bl), so both bilateral closest points lie on the z-axis.

    :return: (tuple) slave center, slave tangent t1, master origin, master axis t2
    """
    t1 = np.array([math.cos(scene.alpha), math.sin(scene.alpha), 0.0])
    t1 /= np.linalg.norm(t1)
    return np.array([0.0, 0.0, scene.d_bl]), t1, np.zeros(3), np.array([1.0, 0.0, 0.0])


def disk_frame(t1, n_ul):
    """ In-plane directions (u1, v1) of a disk, u1 along n_ul projected onto the disk plane. """
    projected = n_ul - np.dot(n_ul, t1) * t1
    norm = np.linalg.norm(projected)
    if norm < PARALLEL_SIN:
        helper = np.eye(3)[np.argmin(np.abs(t1))]
        projected = helper - np.dot(helper, t1) * t1
        norm = np.linalg.norm(projected)
    u1 = projected / norm
    return u1, np.cross(t1, u1)
