import math

import numpy as np
import pytest

from diskcyl.errors import InputError, DomainError, PenetrationError
from diskcyl.geometry import CylinderPairScene
from diskcyl.oracles import loglog_slope, ref_pot_two_cylinders_3d, brute_force_point_cylinder
from diskcyl.point_potentials import PowerLaw, MaterialPair, pot_point_halfspace, pot_point_cylinder_montgomery
from diskcyl.quadrature import axial_scheme, cross_section_schemes
from diskcyl.sbip import analytic_reference_parallel, analytic_reference_skew_vdw


def test_loglog_slope_of_power_law():
    xs = np.logspace(-4, -2, 7)
    fit = loglog_slope(xs, -3.0 * xs ** -1.5)
    assert fit.slope == pytest.approx(-1.5, abs=1e-12)
    assert fit.intercept == pytest.approx(math.log(3.0), abs=1e-9)
    assert fit.max_residual < 1e-9


def test_loglog_slope_input_errors():
    with pytest.raises(InputError):
        loglog_slope([1.0, 2.0], [1.0, 2.0])
    with pytest.raises(InputError):
        loglog_slope([0.0, 1.0, 2.0], [1.0, 2.0, 3.0])
    with pytest.raises(DomainError):
        loglog_slope([1.0, 2.0, 3.0], [1.0, -2.0, 3.0])


def test_brute_force_point_cylinder_near_surface():
    """ Close to the surface a cylinder looks like a half-space; the Montgomery leading term is 3 pi / 4 too large. """
    law, R, g = PowerLaw(6, -1.0), 1.0, 1e-3
    brute = brute_force_point_cylinder(g, R, law, 1.0)
    assert brute < 0
    assert brute == pytest.approx(pot_point_halfspace(g, law, 1.0), rel=0.02)
    assert 2.2 <= pot_point_cylinder_montgomery(g, R, law, 1.0) / brute <= 2.5


def test_brute_force_point_cylinder_errors():
    law = PowerLaw(6, -1.0)
    with pytest.raises(PenetrationError):
        brute_force_point_cylinder(0.0, 1.0, law, 1.0)
    with pytest.raises(InputError):
        brute_force_point_cylinder(0.1, -1.0, law, 1.0)


def test_numeric_reference_parallel_small_gap():
    """ The 3D reference approaches the parallel-cylinder law at small separation. """
    law = PowerLaw(6, -1.0)
    materials = MaterialPair(1.0, 1.0, (law,))
    scene = CylinderPairScene(g_bl=1e-3, alpha=0.0, R1=1.0, R2=1.0, L_slave=20.0)
    numeric = ref_pot_two_cylinders_3d(scene, law, materials)
    analytic = scene.L_slave * analytic_reference_parallel(1e-3, 1.0, 1.0, law, materials)
    assert numeric == pytest.approx(analytic, rel=0.01)


def test_numeric_reference_scales_with_densities():
    law = PowerLaw(6, -1.0)
    scene = CylinderPairScene(g_bl=0.1, alpha=math.pi / 4, R1=1.0, R2=1.0, L_slave=20.0)
    base = ref_pot_two_cylinders_3d(scene, law, MaterialPair(1.0, 1.0, (law,)))
    scaled = ref_pot_two_cylinders_3d(scene, law, MaterialPair(2.0, 3.0, (law,)))
    assert scaled == pytest.approx(6.0 * base, rel=1e-12)


def test_brute_force_point_cylinder_at_moderate_gap():
    """ Curvature lowers the half-space value by about 0.75 g / R. """
    law, R, g = PowerLaw(6, -1.0), 1.0, 1e-2
    brute = brute_force_point_cylinder(g, R, law, 1.0)
    halfspace = pot_point_halfspace(g, law, 1.0)
    assert brute == pytest.approx(halfspace, rel=0.05)


def test_brute_force_point_cylinder_weakens_with_gap():
    law = PowerLaw(6, -1.0)
    magnitudes = [abs(brute_force_point_cylinder(g, 1.0, law, 1.0)) for g in (1e-3, 1e-2, 1e-1, 1.0, 10.0)]
    assert all(later < earlier for earlier, later in zip(magnitudes, magnitudes[1:]))


@pytest.mark.parametrize('g, alpha', [(1e-2, math.pi / 4), (0.1, 0.0)])
def test_numeric_reference_converges_under_refinement(g, alpha):
    law = PowerLaw(6, -1.0)
    materials = MaterialPair(1.0, 1.0, (law,))
    scene = CylinderPairScene(g_bl=g, alpha=alpha, R1=1.0, R2=1.0, L_slave=20.0)
    cross_y, cross_z = cross_section_schemes(g, 1.0)
    coarse = ref_pot_two_cylinders_3d(scene, law, materials, axial_scheme(), cross_y, cross_z)
    fine = ref_pot_two_cylinders_3d(scene, law, materials, axial_scheme().refined(), cross_y.refined(),
                                    cross_z.refined())
    assert fine == pytest.approx(coarse, rel=1e-3)


def test_numeric_reference_perpendicular_small_gap():
    """ Crossed cylinders follow -A sqrt(R1 R2) / (6 g) at small separation. """
    law = PowerLaw(6, -1.0)
    materials = MaterialPair(1.0, 1.0, (law,))
    scene = CylinderPairScene(g_bl=1e-3, alpha=math.pi / 2, R1=1.0, R2=1.0, L_slave=20.0)
    numeric = ref_pot_two_cylinders_3d(scene, law, materials)
    reference = analytic_reference_skew_vdw(1e-3, math.pi / 2, 1.0, 1.0, materials.hamaker_constant())
    assert numeric == pytest.approx(reference, rel=0.02)
