import math

import numpy as np

from diskcyl.disk_cylinder import DEFAULT_OPTION, OptionTag
from diskcyl.errors import InputError
from diskcyl.geometry import DiskCylinderConfig, CylinderPairScene
from diskcyl.point_potentials import PowerLaw, MaterialPair
from diskcyl.quadrature import axial_scheme, cross_section_schemes, brute_force_schemes


def get_scenario():
    """ Default scenario: two unit-radius cylinders, slave length 20, van der Waals law with k6 = -1. """
    return {'m': 6,
            'k': -1.0,
            'k12': 0.0,
            'rho1': 1.0,
            'rho2': 1.0,
            'R1': 1.0,
            'R2': 1.0,
            'L': 20.0,
            'g': 1e-3,
            'alpha': 0.0,
            'theta': math.pi / 2,
            'options': [DEFAULT_OPTION.value]}


def get_quadrature():
    return {'axial_segments': 40,
            'axial_points': 5,
            'axial_ratio': 1.3,
            'cross_y_segments': 16,
            'cross_z_segments': 12,
            'cross_points': 5,
            'brute_force_segments': 24,
            'brute_force_points': 5,
            'tail_tolerance': 1e-6}


def get_settings():
    """ Every configurable key with its default value. """
    settings = get_scenario()
    settings.update(get_quadrature())
    return settings


def get_sweep_grids():
    """ Default abscissae: gaps g/R, the reference angles and a sin(alpha) grid. """
    return {'separations': [float(x) for x in np.logspace(-4, 1, 25)],
            'angles': [0.0, math.pi / 64, math.pi / 16, math.pi / 8, math.pi / 4, math.pi / 2],
            'sin_alpha': [float(x) for x in np.logspace(-2, 0, 32)]}


def get_tolerance_profiles():
    """ Tolerances of the acceptance criteria. 'strict' tightens every tolerance 100 times. """
    default = {'prefactor': 1e-12,
               'parallel_identity': 1e-12,
               'slope_parallel': 0.02,
               'slope_skew': 0.03,
               'angle_flatness': 0.05,
               'angle_slope': 0.05,
               'asymptote': 0.03,
               'offset_band': (1.35, 1.65),
               'offset_flatness': 0.03,
               'error_band_small': (0.015, 0.035),
               'error_band_large': (0.30, 0.48),
               'oracle_halfspace': 0.02,
               'oracle_montgomery_band': (2.2, 2.5),
               'coefficients': 1e-10,
               'equivalence': 1e-10,
               'convergence': 1e-3}
    strict = {}
    for key, value in default.items():
        if isinstance(value, tuple):
            center, half = 0.5 * (value[0] + value[1]), 0.5 * (value[1] - value[0])
            strict[key] = (center - 0.01 * half, center + 0.01 * half)
        else:
            strict[key] = 0.01 * value
    return {'default': default, 'strict': strict}


def _coerce(key, text, default):
    try:
        if isinstance(default, bool):
            if text.lower() not in ('true', 'false', '1', '0', 'yes', 'no'):
                raise ValueError(text)
            return text.lower() in ('true', '1', 'yes')
        if isinstance(default, int):
            return int(text)
        if isinstance(default, float):
            return float(text)
        if isinstance(default, list):
            return [item.strip() for item in text.split(',') if item.strip()]
    except ValueError:
        raise InputError('invalid value {!r} for key {!r}'.format(text, key))
    return text


def load_config(path, settings=None):
    """ Read a `key = value` configuration file on top of the given (or default) settings.

    :param path: (String) Path of a UTF-8 text file, '#' starts a comment
    :param settings: (dict) Settings to update, defaults to get_settings()
    :return: (dict) Updated copy of the settings
    """
    settings = dict(get_settings() if settings is None else settings)
    try:
        with open(path, 'r', encoding='utf-8') as f:
            lines = f.readlines()
    except OSError as error:
        raise InputError('cannot read config file {}: {}'.format(path, error))

    for number, line in enumerate(lines, start=1):
        line = line.split('#', 1)[0].strip()
        if not line:
            continue
        if '=' not in line:
            raise InputError('{}:{}: expected "key = value", got {!r}'.format(path, number, line))
        key, value = (part.strip() for part in line.split('=', 1))
        if key not in settings:
            raise InputError('{}:{}: unknown key {!r}'.format(path, number, key))
        settings[key] = _coerce(key, value, settings[key])
    return settings


def make_law(settings):
    return PowerLaw(settings['m'], settings['k'])


def make_materials(settings):
    """ Material pair carrying the selected law plus, if k12 is set, the repulsive m = 12 term. """
    laws = [make_law(settings)]
    if settings.get('k12') and laws[0].m != 12:
        laws.append(PowerLaw(12, settings['k12']))
    return MaterialPair(settings['rho1'], settings['rho2'], tuple(laws))


def make_options(settings):
    return [OptionTag.parse(option) for option in settings['options']]


def make_scene(settings, g=None, alpha=None):
    """ CylinderPairScene with bilateral gap g * R1 (g given relative to R1). """
    g = settings['g'] if g is None else g
    alpha = settings['alpha'] if alpha is None else alpha
    return CylinderPairScene(g_bl=g * settings['R1'], alpha=alpha, R1=settings['R1'],
                             R2=settings['R2'], L_slave=settings['L'])


def make_disk_config(settings):
    """ DiskCylinderConfig with unilateral gap g * R1. """
    return DiskCylinderConfig.from_gap(settings['g'] * settings['R1'], settings['alpha'], settings['theta'],
                                       settings['R1'], settings['R2'])


def make_axial_scheme(settings):
    return axial_scheme(settings['axial_segments'], settings['axial_points'], settings['axial_ratio'])


def make_schemes(settings, gap):
    """ Slave-axis and cross-section rules for a scene with bilateral gap `gap`. """
    cross_y, cross_z = cross_section_schemes(gap, settings['R1'], n_y=settings['cross_y_segments'],
                                             n_z=settings['cross_z_segments'],
                                             points_per_segment=settings['cross_points'])
    return {'axial': make_axial_scheme(settings),
            'cross_y': cross_y,
            'cross_z': cross_z}


def make_brute_force_schemes(settings, gap, R):
    return brute_force_schemes(gap, R, settings['brute_force_segments'], settings['brute_force_points'])
