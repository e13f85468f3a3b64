import json
import math

import numpy as np
import pytest

from majconfine import analytic
from majconfine.core import PotentialParams
from majconfine.validate import (
    ALGEBRAIC_CHECKS,
    CHECK_NAMES,
    CLAIM_CHECKS,
    ValidateConfig,
    ValidationReport,
    all_passed,
    check_clifford_algebra,
    check_majorana_reality_report,
    check_mass_absence,
    check_mass_translation,
    check_no_gap,
    check_orthonormality,
    check_series_termination,
    check_spectrum_agreement,
    check_susy_partner,
    check_unequal_spacing,
    check_zero_mode,
    format_table,
    run_all,
    to_json_lines,
)

P0 = PotentialParams(0.0, 1.0)


@pytest.fixture(scope="module")
def default_reports():
    return run_all(P0)


def test_spectrum_agreement_m0():
    rep = check_spectrum_agreement(P0, 6, 5e-4)
    assert rep.passed
    assert rep.deviation < 5e-4
    np.testing.assert_allclose(rep.observed["shooting_beta_over_b"], 2 * np.arange(7) + 1,
                               atol=1e-6)


def test_spectrum_agreement_m2_same_expectation():
    rep = check_spectrum_agreement(PotentialParams(2.0, 1.0), 6, 5e-4)
    assert rep.passed
    assert rep.expected == check_spectrum_agreement(P0, 6, 5e-4).expected


def test_spectrum_agreement_below_method_accuracy_fails():
    rep = check_spectrum_agreement(P0, 6, 1e-12)
    assert not rep.passed
    assert rep.status == "fail"


def test_spectrum_agreement_needs_one_level():
    with pytest.raises(ValueError):
        check_spectrum_agreement(P0, 0, 1e-3)


@pytest.mark.parametrize("b, n_max", [(1.0, 20), (0.3, 5)])
def test_no_gap(b, n_max):
    rep = check_no_gap(PotentialParams(0.0, b), n_max)
    assert rep.passed
    assert rep.observed == {"max_pair_sum": 0.0, "E0": 0.0}
    assert rep.kind == "algebraic"


def test_unequal_spacing_values():
    rep = check_unequal_spacing(1.0, 10)
    assert rep.passed
    np.testing.assert_allclose(rep.observed[:3], [math.sqrt(2), 2 - math.sqrt(2), math.sqrt(6) - 2],
                               atol=1e-12)


def test_unequal_spacing_harmonic_ladder_fails():
    rep = check_unequal_spacing(1.0, 3, energies=[0.0, 1.0, 2.0, 3.0])
    assert not rep.passed


def test_unequal_spacing_scales_with_sqrt_b():
    r1 = check_unequal_spacing(1.0, 10)
    r2 = check_unequal_spacing(2.0, 10)
    assert r2.passed
    s1 = np.asarray(r1.observed)
    s2 = np.asarray(r2.observed)
    np.testing.assert_allclose(s2 / s1, math.sqrt(2), rtol=1e-12)


def test_unequal_spacing_precondition():
    with pytest.raises(ValueError):
        check_unequal_spacing(1.0, 1)


def test_mass_absence():
    rep = check_mass_absence(P0)
    assert rep.passed
    assert rep.deviation <= 1e-10


@pytest.mark.parametrize("m, b, tol", [(1.0, 1.0, 1e-10), (0.0, 1.0, 1e-15), (5.0, 0.5, 1e-10)])
def test_mass_translation(m, b, tol):
    rep = check_mass_translation(m, b, tol)
    assert rep.passed


def test_mass_translation_shift_is_m_over_b():
    assert PotentialParams(5.0, 0.5).x0 == 10.0


def test_orthonormality():
    assert check_orthonormality(P0, 6, 1e-8).passed


def test_single_mode_gram():
    rep = check_orthonormality(P0, 0, 1e-8, modes=[analytic.build_mode(2, P0)])
    assert rep.passed
    assert rep.observed["gram_size"] == 1


def test_unnormalized_modes_fail():
    modes = [analytic.build_mode(n, P0, normalize=False) for n in range(3)]
    assert not check_orthonormality(P0, 2, 1e-8, modes=modes).passed


@pytest.mark.parametrize("n", [1, 3])
def test_susy_partner(n):
    rep = check_susy_partner(P0, n, 1e-8)
    assert rep.passed
    assert rep.observed >= 1 - 1e-8


def test_susy_partner_rejects_zero_mode():
    with pytest.raises(ValueError):
        check_susy_partner(P0, 0, 1e-8)


def test_exact_algebra_checks():
    for rep in (check_clifford_algebra(), check_majorana_reality_report(),
                check_series_termination(50)):
        assert rep.passed
        assert rep.deviation == 0.0
        assert rep.kind == "algebraic"


def test_zero_mode():
    rep = check_zero_mode(P0, 1e-6)
    assert rep.passed


def test_report_status_rule():
    rep = ValidationReport("x", "pass", 1.0, 1.0, 0.1, 0.0, deviation=0.1)
    assert rep.passed
    d = rep.to_dict(include_runtime=False)
    assert "runtime" not in d


def test_run_all_default(default_reports):
    assert [r.check_name for r in default_reports] == list(CHECK_NAMES)
    assert all_passed(default_reports)
    assert sum(r.runtime for r in default_reports) < 60


def test_run_all_tol_zero_splits_by_kind():
    reports = run_all(P0, ValidateConfig(tol=0.0))
    for r in reports:
        if r.check_name in ALGEBRAIC_CHECKS:
            assert r.passed, r.check_name
        else:
            assert not r.passed, r.check_name
    assert {r.kind for r in reports} == {"algebraic", "numerical"}


def test_run_all_rejects_bad_params():
    with pytest.raises(ValueError, match="b must be positive"):
        run_all((0.0, -1.0))
    with pytest.raises(ValueError):
        run_all(P0, ValidateConfig(n_max=1))
    with pytest.raises(ValueError):
        run_all(P0, ValidateConfig(tol=-1.0))


def test_claim_table_complete():
    claims = {"spectrum formula", "no gap", "null ground-state", "not equally spaced",
              "mass absent", "x-origin"}
    for c in claims:
        assert sum(c in key for key in CLAIM_CHECKS) == 1, c
    assert set(CLAIM_CHECKS.values()) <= set(CHECK_NAMES)


def test_reports_deterministic(default_reports):
    again = run_all(P0, ValidateConfig(workers=4))
    assert to_json_lines(default_reports, False) == to_json_lines(again, False)


def test_json_lines_parse(default_reports):
    lines = to_json_lines(default_reports).splitlines()
    assert len(lines) == len(CHECK_NAMES)
    for line, name in zip(lines, CHECK_NAMES):
        d = json.loads(line)
        assert d["check_name"] == name
        assert d["status"] in ("pass", "fail")
        assert {"observed", "expected", "tolerance", "runtime"} <= set(d)


def test_table_lists_every_check(default_reports):
    table = format_table(default_reports)
    for name in CHECK_NAMES:
        assert name in table
