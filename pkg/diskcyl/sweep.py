"""
Parameter sweeps over the two-cylinder scene, written as CSV tables.
"""
import math
from dataclasses import dataclass, field, replace

import numpy as np
import pandas as pd
from tqdm import tqdm

from diskcyl.disk_cylinder import OptionTag, disk_cylinder_potential, disk_cylinder_potential_total
from diskcyl.errors import DiskCylError, InputError
from diskcyl.geometry import PARALLEL_SIN
from diskcyl.oracles import ref_pot_two_cylinders_3d
from diskcyl.sbip import (two_cylinder_potential, two_cylinder_potential_total, analytic_reference_parallel,
                          analytic_reference_skew_vdw)
from diskcyl.scenario import (get_settings, make_law, make_materials, make_options, make_scene,
                              make_disk_config, make_schemes, make_axial_scheme)

COLUMNS = ['sweep_value', 'option', 'g_over_R', 'alpha_rad', 'potential', 'ref_numeric3d', 'ref_analytic',
           'rel_err_numeric', 'rel_err_analytic', 'error_code']
FLOAT_FORMAT = '%.11e'
REF_UNAVAILABLE = 'ref_analytic_unavailable'
MODES = ('separation', 'angle')


@dataclass(frozen=True)
class SweepRequest:
    """ A sweep over g_bl/R1 at fixed alpha ('separation') or over alpha at fixed g_bl/R1 ('angle').

    With sin_abscissa the angle grid holds sin(alpha) values instead of angles.
    """
    mode: str
    fixed_value: float
    grid: tuple
    options: tuple
    law: object
    materials: object
    scene: object
    include_analytic: bool = True
    include_numeric: bool = False
    sin_abscissa: bool = False
    settings: dict = field(default_factory=get_settings, compare=False)

    def __post_init__(self):
        if self.mode not in MODES:
            raise InputError('sweep mode must be one of {}, got {!r}'.format(MODES, self.mode))
        grid = tuple(float(value) for value in self.grid)
        object.__setattr__(self, 'grid', grid)
        object.__setattr__(self, 'options', tuple(OptionTag.parse(option) for option in self.options))
        if any(b <= a for a, b in zip(grid, grid[1:])):
            raise InputError('sweep grid must be strictly increasing')
        if self.mode == 'separation' and any(value <= 0 for value in grid):
            raise InputError('separation grid must be positive')
        if self.mode == 'angle':
            upper = 1.0 if self.sin_abscissa else math.pi / 2
            if any(not 0.0 <= value <= upper for value in grid):
                raise InputError('angle grid must lie within [0, {}]'.format(upper))

    def scene_at(self, value):
        """ Scene for one grid value. """
        R1 = self.scene.R1
        if self.mode == 'separation':
            return replace(self.scene, g_bl=value * R1, alpha=self.fixed_value)
        alpha = math.asin(value) if self.sin_abscissa else value
        return replace(self.scene, g_bl=self.fixed_value * R1, alpha=alpha)


def analytic_reference(scene, law, materials):
    """ Reference total potential of a scene, parallel law at alpha = 0 and skew van der Waals law otherwise.

    :return: (tuple) value or None, error code ('' when available)
    """
    try:
        if math.sin(scene.alpha) < PARALLEL_SIN:
            return scene.L_slave * analytic_reference_parallel(scene.g_bl, scene.R1, scene.R2, law, materials), ''
        if law.m != 6:
            return None, REF_UNAVAILABLE
        return analytic_reference_skew_vdw(scene.g_bl, scene.alpha, scene.R1, scene.R2,
                                           -math.pi ** 2 * law.k * materials.rho1 * materials.rho2), ''
    except DiskCylError:
        return None, REF_UNAVAILABLE


def _relative_error(value, reference):
    if value is None or reference is None or reference == 0:
        return None
    return abs(value - reference) / abs(reference)


def sweep_table(request, progress=False, log_lines=None):
    """ Evaluate a sweep, one row per grid value and option, in grid order.

    Errors at single points are recorded in the error_code column and, if log_lines is a list,
    appended to it as text.

    :param request: (SweepRequest) What to evaluate
    :param progress: (bool) Show a tqdm progress bar
    :param log_lines: (list) Receives one line per recorded error
    :return: (pd.DataFrame) Columns COLUMNS
    """
    rows = []
    if request.options:
        for value in tqdm(request.grid, desc='sweep-{}'.format(request.mode), disable=not progress):
            rows.extend(_sweep_rows(request, value, log_lines))
    table = pd.DataFrame(rows, columns=COLUMNS)
    return table.astype({'option': str, 'error_code': str})


def _sweep_rows(request, value, log_lines):
    def record(error, what):
        if log_lines is not None:
            log_lines.append('{} = {!r}, {}: [{}] {}'.format(request.mode, value, what, error.code, error))
        return error.code

    try:
        scene = request.scene_at(value)
    except DiskCylError as error:
        code = record(error, 'scene')
        return [_row(value, option, None, None, None, None, code) for option in request.options]

    numeric, numeric_codes = None, []
    if request.include_numeric:
        try:
            schemes = make_schemes(request.settings, scene.g_bl)
            numeric = ref_pot_two_cylinders_3d(scene, request.law, request.materials, **schemes)
        except DiskCylError as error:
            numeric_codes.append(record(error, 'numeric reference'))

    analytic, analytic_codes = None, []
    if request.include_analytic:
        analytic, code = analytic_reference(scene, request.law, request.materials)
        if code:
            analytic_codes.append(code)

    axial = make_axial_scheme(request.settings)
    rows = []
    for option in request.options:
        codes = []
        try:
            potential = two_cylinder_potential(scene, option, request.law, request.materials, axial).total_potential
        except DiskCylError as error:
            potential = None
            codes.append(record(error, 'option {}'.format(option.value)))
        code = ';'.join(codes + numeric_codes + analytic_codes)
        rows.append(_row(value, option, scene, potential, numeric, analytic, code))
    return rows


def _row(value, option, scene, potential, numeric, analytic, code):
    return {'sweep_value': value,
            'option': option.value,
            'g_over_R': np.nan if scene is None else scene.g_bl / scene.R1,
            'alpha_rad': np.nan if scene is None else scene.alpha,
            'potential': np.nan if potential is None else potential,
            'ref_numeric3d': np.nan if numeric is None else numeric,
            'ref_analytic': np.nan if analytic is None else analytic,
            'rel_err_numeric': _nan(_relative_error(potential, numeric)),
            'rel_err_analytic': _nan(_relative_error(potential, analytic)),
            'error_code': code}


def _nan(value):
    return np.nan if value is None else value


def to_csv(table):
    """ CSV text with fixed float formatting; missing values are empty cells. """
    return table.to_csv(index=False, float_format=FLOAT_FORMAT, na_rep='')


def run_sweep(request, progress=False, log_lines=None):
    """ Evaluate a sweep and return it as CSV text. """
    return to_csv(sweep_table(request, progress=progress, log_lines=log_lines))


def make_request(settings, mode, fixed_value, grid, include_analytic=True, include_numeric=False,
                 sin_abscissa=False):
    """ Build a SweepRequest from a settings dict (see scenario.get_settings). """
    scene = make_scene(settings, g=settings['g'], alpha=settings['alpha'])
    return SweepRequest(mode=mode, fixed_value=fixed_value, grid=tuple(grid), options=tuple(make_options(settings)),
                        law=make_law(settings), materials=make_materials(settings), scene=scene,
                        include_analytic=include_analytic, include_numeric=include_numeric,
                        sin_abscissa=sin_abscissa, settings=settings)


def compare_options(settings, include_numeric=False):
    """ Every configured option at the scene of `settings`, with both references.

    :param settings: (dict) Scenario, options and quadrature settings
    :param include_numeric: (bool) Also compute the 3D numerical reference
    :return: (pd.DataFrame) One row per option, sweep_value holds alpha
    """
    request = make_request(settings, 'angle', settings['g'], [settings['alpha']],
                           include_analytic=True, include_numeric=include_numeric)
    return sweep_table(request)


def eval_point(settings, two_cylinder=False, all_laws=False):
    """ Potential of a single configuration.

    :param settings: (dict) Scenario settings; the first entry of 'options' is used
    :param two_cylinder: (bool) Total two-cylinder potential instead of the disk-cylinder density
    :param all_laws: (bool) Sum over every law of the material pair (e.g. adhesion plus repulsion)
    :return: (float)
    """
    options = make_options(settings)
    if not options:
        raise InputError('no option selected')
    option, materials = options[0], make_materials(settings)

    if two_cylinder:
        scene = make_scene(settings)
        axial = make_axial_scheme(settings)
        if all_laws:
            return two_cylinder_potential_total(scene, option, materials, axial)
        return two_cylinder_potential(scene, option, make_law(settings), materials, axial).total_potential

    config = make_disk_config(settings)
    if all_laws:
        return disk_cylinder_potential_total(config, option, materials)
    return disk_cylinder_potential(config, option, make_law(settings), materials)
