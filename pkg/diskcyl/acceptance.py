"""
Self-verification suite: prefactor identities, scaling laws, asymptotes, oracle agreement and
property checks of the disk-cylinder laws.

Every criterion returns a list of CheckResult rows; verify() runs a selection of them under a
tolerance profile from scenario.get_tolerance_profiles().
"""
import math
from dataclasses import dataclass

import numpy as np
from tqdm import tqdm

from diskcyl.disk_cylinder import (OptionTag, coefficients, coefficients_from_vectors, aux_variables,
                                   disk_cylinder_potential, prefactor_K, prefactor_K_generic, prefactor_K_hat)
from diskcyl.errors import (DiskCylError, InputError, InvalidConfigurationError, DivergentIntegralError,
                            ProjectionSingularityError)
from diskcyl.geometry import (PARALLEL_SIN, DiskCylinderConfig, bilateral_closest_points, extract_config, scene_axes,
                             unilateral_normal)
from diskcyl.oracles import loglog_slope, ref_pot_two_cylinders_3d, brute_force_point_cylinder
from diskcyl.point_potentials import (PowerLaw, MaterialPair, pot_point_halfspace, pot_point_cylinder_montgomery,
                                      prefactor_ratio_pt_cyl_vs_hs)
from diskcyl.sbip import (two_cylinder_potential, analytic_reference_parallel, analytic_reference_skew_vdw,
                          slave_disk_config)
from diskcyl.scenario import (get_settings, get_sweep_grids, get_tolerance_profiles, make_scene, make_schemes,
                              make_axial_scheme, make_brute_force_schemes)
from diskcyl.sweep import make_request, run_sweep

SKEW_ANGLES = (math.pi / 64, math.pi / 16, math.pi / 8, math.pi / 4, math.pi / 2)
ASYMPTOTE_ANGLES = (math.pi / 16, math.pi / 8, math.pi / 4, math.pi / 2)
SCALING_GAPS = tuple(np.logspace(-4, -2, 5))
OFFSET_GAPS = tuple(np.logspace(-4, -3, 5))
SMALL_GAP = 1e-3
SEED = 20160616


@dataclass(frozen=True)
class CheckResult:
    """ One measured quantity of a criterion.

    tolerance is either a number (|measured - expected| <= tolerance) or a (low, high) band
    that measured has to lie in.
    """
    criterion: int
    name: str
    measured: float
    expected: float
    tolerance: object
    passed: bool
    detail: str = ''

    def describe(self):
        if isinstance(self.tolerance, tuple):
            target = 'in [{:.4g}, {:.4g}]'.format(*self.tolerance)
        else:
            target = '{:.6g} +- {:.3g}'.format(self.expected, self.tolerance)
        line = '{:<52} measured {:>14.6e}  expected {}'.format(self.name, self.measured, target)
        return line + ('  ({})'.format(self.detail) if self.detail else '')


def _within(criterion, name, measured, expected, tolerance, detail=''):
    passed = bool(np.isfinite(measured) and abs(measured - expected) <= tolerance)
    return CheckResult(criterion, name, float(measured), float(expected), tolerance, passed, detail)


def _in_band(criterion, name, measured, band, detail=''):
    low, high = band
    passed = bool(np.isfinite(measured) and low <= measured <= high)
    return CheckResult(criterion, name, float(measured), 0.5 * (low + high), tuple(band), passed, detail)


def _relative(value, reference):
    return abs(value - reference) / abs(reference)


def _vdw_setup(settings, m=6):
    law = PowerLaw(m, settings['k'])
    return law, MaterialPair(settings['rho1'], settings['rho2'], (law,))


def _total(settings, g, alpha, option, law, materials):
    scene = make_scene(settings, g=g, alpha=alpha)
    return two_cylinder_potential(scene, option, law, materials, make_axial_scheme(settings)).total_potential


def _skew_reference(settings, g, alpha, materials):
    R1, R2 = settings['R1'], settings['R2']
    return analytic_reference_skew_vdw(g * R1, alpha, R1, R2, materials.hamaker_constant())


def _options_at(alpha):
    options = list(OptionTag)
    if math.sin(alpha) < PARALLEL_SIN:
        options.remove(OptionTag.A)
    return options


# ---- criteria

def check_prefactors(settings, tolerances):
    """ Tabulated and Gamma-function prefactors against their closed forms. """
    k, rho2, tol = settings['k'], settings['rho2'], tolerances['prefactor']
    pi2 = math.pi ** 2
    identities = [('K_6 (Gamma form)', prefactor_K_generic(6, k, rho2), pi2 * k * rho2 / 3.0),
                  ('K_12 (Gamma form)', prefactor_K_generic(12, k, rho2), 286.0 * pi2 * k * rho2 / 15.0),
                  ('K_6 (tabulated)', prefactor_K(6, k, rho2), pi2 * k * rho2 / 3.0),
                  ('K_12 (tabulated)', prefactor_K(12, k, rho2), 286.0 * pi2 * k * rho2 / 15.0),
                  ('K_hat_6', prefactor_K_hat(6, k, rho2), pi2 * k * rho2 / 24.0),
                  ('K_hat_12', prefactor_K_hat(12, k, rho2), 143.0 * pi2 * k * rho2 / (15.0 * 2 ** 14)),
                  ('K_6,pt-cyl / K_6,pt-hs', prefactor_ratio_pt_cyl_vs_hs(6), 3.0 * math.pi / 4.0)]
    return [_within(1, 'relative error ' + name, _relative(value, exact), 0.0, tol)
            for name, value, exact in identities]


def check_parallel_identity(settings, tolerances):
    """ Reduced option C at alpha = 0 against the parallel-cylinder law, m = 6 and 12. """
    R1, R2 = settings['R1'], settings['R2']
    rows = []
    for m in (6, 12):
        law, materials = _vdw_setup(settings, m)
        worst = 0.0
        for g in np.logspace(-4, 0, 20) * R1:
            config = DiskCylinderConfig.from_gap(g, 0.0, math.pi / 2, R1, R2)
            value = disk_cylinder_potential(config, OptionTag.C_SIMPLIFIED, law, materials)
            reference = analytic_reference_parallel(config.g_ul, R1, R2, law, materials)
            worst = max(worst, _relative(value, reference))
        rows.append(_within(2, 'max relative deviation, m = {}'.format(m), worst, 0.0,
                            tolerances['parallel_identity']))
    return rows


def check_separation_scaling(settings, tolerances):
    """ Log-log slope of the two-cylinder potential over g/R in [1e-4, 1e-2].

    Option A approaches the skew law only as O(g) (about 20 % high at g/R = 1e-2 for
    alpha = pi/8), so its slope is fitted on the lower decade [1e-4, 1e-3] and its
    relative error against the skew law is checked at g/R = 1e-4.
    """
    law, materials = _vdw_setup(settings)
    rows = []
    for alpha in (0.0,) + SKEW_ANGLES:
        parallel = math.sin(alpha) < PARALLEL_SIN
        expected = -1.5 if parallel else -1.0
        tolerance = tolerances['slope_parallel'] if parallel else tolerances['slope_skew']
        for option in _options_at(alpha):
            gaps = SCALING_GAPS[:3] if option is OptionTag.A else SCALING_GAPS
            totals = [_total(settings, g, alpha, option, law, materials) for g in gaps]
            fit = loglog_slope(gaps, totals)
            rows.append(_within(3, 'slope alpha = {:.5f}, option {}'.format(alpha, option.value),
                                fit.slope, expected, tolerance,
                                'g/R in [{:.0e}, {:.0e}]'.format(gaps[0], gaps[-1])))
            if option is OptionTag.A and alpha in ASYMPTOTE_ANGLES:
                reference = _skew_reference(settings, gaps[0], alpha, materials)
                rows.append(_within(3, 'option A vs skew law alpha = {:.5f}, g/R = {:.0e}'.format(alpha, gaps[0]),
                                    _relative(totals[0], reference), 0.0, tolerances['asymptote']))
    return rows


def check_angle_scaling(settings, tolerances):
    """ 1/sin(alpha) dependence of options A and B at g/R = 1e-3. """
    law, materials = _vdw_setup(settings)
    lowest = math.sin(math.pi / 16) * (1.0 - 1e-12)
    sines = [s for s in get_sweep_grids()['sin_alpha'] if s >= lowest]
    rows = []
    for option in (OptionTag.A, OptionTag.B):
        totals = np.array([_total(settings, SMALL_GAP, math.asin(s), option, law, materials) for s in sines])
        scaled = np.abs(totals) * np.array(sines)
        spread = (scaled.max() - scaled.min()) / scaled.max()
        rows.append(_within(4, '|total| sin(alpha) spread, option {}'.format(option.value), spread, 0.0,
                            tolerances['angle_flatness']))
        fit = loglog_slope(sines, totals)
        rows.append(_within(4, 'slope vs sin(alpha), option {}'.format(option.value), fit.slope, -1.0,
                            tolerances['angle_slope']))
    return rows


def check_asymptote(settings, tolerances):
    """ Options A and B against the skew-cylinder van der Waals law at g/R = 1e-3. """
    law, materials = _vdw_setup(settings)
    rows = []
    for alpha in ASYMPTOTE_ANGLES:
        reference = _skew_reference(settings, SMALL_GAP, alpha, materials)
        for option in (OptionTag.A, OptionTag.B):
            value = _total(settings, SMALL_GAP, alpha, option, law, materials)
            rows.append(_within(5, 'relative error alpha = {:.5f}, option {}'.format(alpha, option.value),
                                _relative(value, reference), 0.0, tolerances['asymptote']))
    return rows


def check_option_c_offset(settings, tolerances):
    """ Constant overestimate of the reduced option C at alpha = pi/2. """
    law, materials = _vdw_setup(settings)
    alpha = math.pi / 2
    ratios = np.array([abs(_total(settings, g, alpha, OptionTag.C_SIMPLIFIED, law, materials))
                       / abs(_skew_reference(settings, g, alpha, materials)) for g in OFFSET_GAPS])
    band = tolerances['offset_band']
    return [_in_band(6, 'smallest |Csimp| / |skew law|', ratios.min(), band),
            _in_band(6, 'largest |Csimp| / |skew law|', ratios.max(), band),
            _within(6, 'relative spread of the ratio', (ratios.max() - ratios.min()) / ratios.mean(), 0.0,
                    tolerances['offset_flatness'])]


def check_parallel_error(settings, tolerances):
    """ Reduced option C against the 3D numerical reference for parallel cylinders. """
    law, materials = _vdw_setup(settings)
    rows = []
    for g, band in ((0.1, tolerances['error_band_small']), (1.0, tolerances['error_band_large'])):
        scene = make_scene(settings, g=g, alpha=0.0)
        numeric = ref_pot_two_cylinders_3d(scene, law, materials, **make_schemes(settings, scene.g_bl))
        value = two_cylinder_potential(scene, OptionTag.C_SIMPLIFIED, law, materials,
                                       make_axial_scheme(settings)).total_potential
        rows.append(_in_band(7, 'relative error vs 3D reference, g/R = {}'.format(g),
                             _relative(value, numeric), band))
    return rows


def check_oracles(settings, tolerances):
    """ Brute-force point-cylinder integral against the half-space and Montgomery laws. """
    law = PowerLaw(6, settings['k'])
    R, rho = settings['R2'], settings['rho2']
    g = SMALL_GAP * R
    brute = brute_force_point_cylinder(g, R, law, rho, specs=make_brute_force_schemes(settings, g, R),
                                       tail_tolerance=settings['tail_tolerance'])
    return [_within(8, 'brute force vs half-space, relative error',
                    _relative(brute, pot_point_halfspace(g, law, rho)), 0.0, tolerances['oracle_halfspace']),
            _in_band(8, 'Montgomery leading term / brute force',
                     pot_point_cylinder_montgomery(g, R, law, rho) / brute, tolerances['oracle_montgomery_band'])]


def _random_unit(rng):
    vec = rng.normal(size=3)
    return vec / np.linalg.norm(vec)


def _random_disk(rng, R1, R2):
    """ Random slave tangent, master axis through the origin and disk center outside the master. """
    t1, t2 = _random_unit(rng), _random_unit(rng)
    radial = _random_unit(rng)
    radial -= np.dot(radial, t2) * t2
    radial /= np.linalg.norm(radial)
    d_ul = R1 + R2 + R1 * 10.0 ** rng.uniform(-4.0, 0.0)
    center = d_ul * radial + rng.uniform(-5.0, 5.0) * t2
    return center, t1, t2


def _coefficient_deviation(config, option, t1, t2, n_ul):
    """ Largest difference of angle and vector coefficients, normalized by powers of d_ul. """
    d = config.d_ul
    angle = coefficients(config, option)
    vector = coefficients_from_vectors(t1, t2, n_ul, d, option)
    return max(abs(angle.a_y - vector.a_y),
               abs(angle.a_z - vector.a_z),
               abs(abs(angle.a_yz) - abs(vector.a_yz)),
               abs((angle.b_y / (2 * d)) ** 2 - (vector.b_y / (2 * d)) ** 2),
               abs(abs(angle.b_z) - abs(vector.b_z)) / (2 * d),
               abs(angle.c - vector.c) / d ** 2)


def _delta_failures(settings, rng, count):
    """ Configurations with Delta <= 0 among `count` valid samples per option. """
    R1, R2 = settings['R1'], settings['R2']
    failures = 0
    for _ in range(count):
        alpha = rng.uniform(0.0, math.pi / 2)
        vartheta = rng.uniform(-math.pi / 2, math.pi / 2)
        g = R1 * 10.0 ** rng.uniform(-4.0, 0.0)
        config = DiskCylinderConfig.from_gap(g, alpha, math.acos(math.sin(alpha) * math.sin(vartheta)), R1, R2)
        for option in (OptionTag.B, OptionTag.C, OptionTag.C_SIMPLIFIED):
            try:
                aux_variables(config, option)
            except (ProjectionSingularityError, DivergentIntegralError):
                continue
            except InvalidConfigurationError:
                failures += 1

        # option A on configurations that occur between two straight fibers
        scene = make_scene(settings, g=g / R1, alpha=rng.uniform(1e-3, math.pi / 2))
        s1 = rng.uniform(-0.5, 0.5) * scene.L_slave
        try:
            aux_variables(slave_disk_config(scene, s1), OptionTag.A)
        except DivergentIntegralError:
            continue
        except InvalidConfigurationError:
            failures += 1
    return failures


def check_properties(settings, tolerances):
    """ Coefficient equivalence, option equivalence at theta = pi/2, Delta > 0, quadrature convergence
    and CSV determinism.
    """
    rng = np.random.default_rng(SEED)
    R1, R2 = settings['R1'], settings['R2']
    rows = []

    worst = 0.0
    for _ in range(1000):
        center, t1, t2 = _random_disk(rng, R1, R2)
        config = extract_config(center, t1, R1, np.zeros(3), t2, R2)
        n_ul, _ = unilateral_normal(center, np.zeros(3), t2)
        for option in (OptionTag.A, OptionTag.B):
            worst = max(worst, _coefficient_deviation(config, option, t1, t2, n_ul))
    rows.append(_within(9, 'angle vs vector coefficients, max deviation', worst, 0.0, tolerances['coefficients']))

    worst = 0.0
    for i in range(1000):
        law, materials = _vdw_setup(settings, 6 if i % 2 == 0 else 12)
        config = DiskCylinderConfig.from_gap(R1 * 10.0 ** rng.uniform(-4.0, 0.0), rng.uniform(1e-3, math.pi / 2),
                                             math.pi / 2, R1, R2)
        values = [disk_cylinder_potential(config, option, law, materials)
                  for option in (OptionTag.A, OptionTag.B, OptionTag.C)]
        worst = max(worst, max(_relative(value, values[2]) for value in values[:2]))
    rows.append(_within(9, 'options A, B, C at theta = pi/2, max deviation', worst, 0.0,
                        tolerances['equivalence']))

    rows.append(_within(9, 'configurations with Delta <= 0', _delta_failures(settings, rng, 10000), 0.0, 0.0))

    law, materials = _vdw_setup(settings)
    axial = make_axial_scheme(settings)
    worst = 0.0
    for alpha in (0.0, math.pi / 4, math.pi / 2):
        scene = make_scene(settings, g=SMALL_GAP, alpha=alpha)
        for option in (OptionTag.B, OptionTag.C_SIMPLIFIED):
            coarse = two_cylinder_potential(scene, option, law, materials, axial).total_potential
            fine = two_cylinder_potential(scene, option, law, materials, axial.refined()).total_potential
            worst = max(worst, _relative(coarse, fine))
    rows.append(_within(9, 'change under axial refinement', worst, 0.0, tolerances['convergence']))

    worst = 0.0
    for alpha in (0.0,) + SKEW_ANGLES:
        for g in SCALING_GAPS:
            scene = make_scene(settings, g=g, alpha=alpha)
            center, t1, origin2, t2 = scene_axes(scene)
            p1, p2, s1, _ = bilateral_closest_points(center, t1, origin2, t2)
            worst = max(worst, abs(np.linalg.norm(p1 - p2) - scene.d_bl) / scene.d_bl, abs(s1) / scene.L_slave)
    rows.append(_within(9, 'scene axes: closest-point gap and slave centering', worst, 0.0,
                        tolerances['coefficients']))

    sweep_settings = dict(settings, options=[tag.value for tag in OptionTag])
    request = make_request(sweep_settings, 'separation', math.pi / 4, [1e-3, 1e-2, 1e-1])
    mismatch = 0.0 if run_sweep(request) == run_sweep(request) else 1.0
    rows.append(_within(9, 'CSV reruns differing', mismatch, 0.0, 0.0))
    return rows


CRITERIA = {1: check_prefactors,
            2: check_parallel_identity,
            3: check_separation_scaling,
            4: check_angle_scaling,
            5: check_asymptote,
            6: check_option_c_offset,
            7: check_parallel_error,
            8: check_oracles,
            9: check_properties}


def verify(settings=None, profile='default', criteria=None, progress=False):
    """ Run acceptance criteria.

    :param settings: (dict) Scenario and quadrature settings, defaults to get_settings()
    :param profile: (String) Name of a tolerance profile
    :param criteria: (iterable) Criterion numbers, defaults to all
    :param progress: (bool) Show a tqdm progress bar
    :return: (list) CheckResult rows in criterion order
    """
    settings = get_settings() if settings is None else settings
    profiles = get_tolerance_profiles()
    if profile not in profiles:
        raise InputError('unknown tolerance profile {!r}, available: {}'.format(profile, ', '.join(profiles)))
    selected = sorted(CRITERIA) if not criteria else sorted(set(criteria))
    unknown = [number for number in selected if number not in CRITERIA]
    if unknown:
        raise InputError('unknown criteria {}, available: 1-{}'.format(unknown, len(CRITERIA)))

    rows = []
    for number in tqdm(selected, desc='verify', disable=not progress):
        try:
            rows.extend(CRITERIA[number](settings, profiles[profile]))
        except DiskCylError as error:
            rows.append(CheckResult(number, CRITERIA[number].__name__, math.nan, math.nan, math.nan, False,
                                    '[{}] {}'.format(error.code, error)))
    return rows
