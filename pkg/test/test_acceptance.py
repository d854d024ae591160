import math

import pytest

from diskcyl.acceptance import CRITERIA, CheckResult, verify
from diskcyl.errors import InputError


def test_all_criteria_pass_on_default_profile():
    rows = verify()
    assert {row.criterion for row in rows} == set(range(1, 10))
    assert len([row for row in rows if row.criterion == 1]) == 7
    assert all(row.passed for row in rows), [row.describe() for row in rows if not row.passed]


def test_option_a_tends_to_skew_law():
    """ Option A is fitted on the lower decade and checked against the skew law at g/R = 1e-4. """
    rows = [row for row in verify(criteria=[3]) if 'option A' in row.name]
    slopes = [row for row in rows if row.name.startswith('slope')]
    errors = [row for row in rows if 'skew law' in row.name]
    assert len(slopes) == 5 and len(errors) == 4
    assert all('[1e-04, 1e-03]' in row.detail for row in slopes)
    assert all(row.measured < 0.03 for row in errors)


def test_single_criterion_selection():
    rows = verify(criteria=[8])
    assert {row.criterion for row in rows} == {8}
    assert all(row.passed for row in rows), [row.describe() for row in rows if not row.passed]


def test_verify_input_errors():
    with pytest.raises(InputError):
        verify(profile='lenient', criteria=[1])
    with pytest.raises(InputError):
        verify(criteria=[10])


def test_criteria_table():
    assert sorted(CRITERIA) == list(range(1, 10))


def test_check_result_describe():
    passed = CheckResult(3, 'slope', -1.01, -1.0, 0.03, True)
    assert 'measured' in passed.describe() and '+-' in passed.describe()
    band = CheckResult(6, 'ratio', 1.41, 1.5, (1.35, 1.65), True)
    assert 'in [1.35, 1.65]' in band.describe()
    failed = CheckResult(7, 'criterion', math.nan, math.nan, math.nan, False, '[convergence] no luck')
    assert '[convergence]' in failed.describe()


def test_strict_profile_rejects_option_c_offset():
    """ The reduced law sits near sqrt(2) times the skew law, outside the strict band around 1.5. """
    rows = verify(profile='strict', criteria=[6])
    assert not rows[0].passed
    assert rows[0].tolerance[1] - rows[0].tolerance[0] == pytest.approx(0.003)
