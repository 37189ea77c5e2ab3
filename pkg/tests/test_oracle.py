"""
┏━━━━━━━━━━━━━━━━━━━━━━━━━━┓
┃ Signumcalc Radial Engine ┃
┗━━━━━━━━━━━━━━━━━━━━━━━━━━┛
Tests of Oracle
"""

# Libraries
import json
from fractions import Fraction

import pytest
from pydantic import ValidationError
from sympy import rf, Rational, factorial as sym_factorial, Integer

from Algebra import DimScalar, M
from Kernel import Distribution, SignumDistribution, act_dr, act_omega, div_r, div_x, mul_x
from Oracle import (
    OracleConfig, SuiteReport, VerifyReport,
    c_constant, physics_coefficient, sample_polys,
    pair_cartesian, pair_spherical, pair_signum, pair_signum_spherical, pair_routes, pair_physics,
    verify_identity, verify_duality, check_values,
    SUITES, SUITE_ALIASES, suite_names, resolve_suite, run_suite, run_all
)
from Poly import PairingValue, parse_poly
from Utilities.error_tools import KindMismatch, SpaceMismatch, UnknownSuite, DomainError

DELTA = Distribution.delta()
SMALL = OracleConfig(kmax=2, lmax=2, nmax=5, dims=[2, 3], trials=4, max_degree=6, seed=7, workers=1)

# ========== 상수 부분 ==========

def test_c_constant_values():
    assert c_constant(0, 5) == 1
    assert c_constant(1, 4) == 4
    assert c_constant(2, 2) == Fraction(8, 3)
    with pytest.raises(DomainError):
        c_constant(1, 1)

@pytest.mark.parametrize("l", range(6))
@pytest.mark.parametrize("m", [2, 3, 5, 8])
def test_c_constant_matches_rising_factorial(l, m):
    expected = Integer(2) ** (2 * l) * sym_factorial(l) / sym_factorial(2 * l) * rf(Rational(m, 2), l)
    assert c_constant(l, m) == Fraction(int(expected.p), int(expected.q))

def test_physics_coefficient():
    assert physics_coefficient(0) == DimScalar(1)
    assert physics_coefficient(2) == M * (M + 1) / 2

# ========== Pairing 부분 ==========

def test_laplace_delta_pairs_to_two():
    phi = parse_poly("x1^2", 3)
    T = Distribution.basis(2, -1)
    assert pair_cartesian(T, phi, 3) == PairingValue.of_scalar(2)
    assert pair_spherical(T, phi, 3) == PairingValue.of_scalar(2)

def test_dirac_delta_pairs_to_minus_gradient():
    phi = parse_poly("x1", 3)
    expected = PairingValue.of_vector([-1, 0, 0])
    assert pair_cartesian(Distribution.basis(1), phi, 3) == expected
    assert pair_spherical(Distribution.basis(1), phi, 3) == expected

def test_signum_pairing_contract():
    phi = parse_poly("4 + x2", 2)
    assert pair_signum(SignumDistribution.basis(0), phi, 2) == PairingValue.of_scalar(-4)
    assert pair_signum_spherical(SignumDistribution.basis(0), phi, 2) == PairingValue.of_scalar(-4)

def test_dual_routes_agree_on_random_polynomials():
    for m in (2, 3, 4):
        for phi in sample_polys(m, 5, 8, 3):
            for n in range(9):
                routes = pair_routes(Distribution.basis(n, M + 1), phi, m)
                assert routes["cartesian"] == routes["spherical"]

def test_physics_form_of_radial_derivatives():
    phi = parse_poly("x1^2 + 3*x2^2 - x1*x2", 3)
    T = Distribution.basis(2, -(M + 1) / 2)  # ∂_r² δ
    assert pair_physics(2, phi) == pair_cartesian(T, phi, 3)

def test_mixed_kinds_need_permission():
    mixed = Distribution({0: 1, 1: 1})
    phi = parse_poly("2 + x1", 2)
    with pytest.raises(KindMismatch) as error:
        pair_cartesian(mixed, phi, 2)
    assert error.value.value.is_mixed()
    assert pair_cartesian(mixed, phi, 2, allow_mixed=True).is_mixed()

def test_pairing_checks_space_and_dimension():
    phi = parse_poly("x1", 2)
    with pytest.raises(SpaceMismatch):
        pair_cartesian(SignumDistribution.basis(0), phi, 2)
    with pytest.raises(DomainError):
        pair_cartesian(DELTA, phi, 3)

# ========== 검증 부분 ==========

def test_verify_identity_pass_and_fail():
    passed = verify_identity("x_dirac", mul_x(Distribution.basis(1)), DELTA.scale(M), [2, 3], trials=3)
    assert passed.passed
    failed = verify_identity("wrong", mul_x(Distribution.basis(1)), DELTA.scale(M + 1), [2, 3], trials=3)
    assert not failed.passed
    assert failed.note == "symbolic coefficients differ"

def test_verify_identity_rejects_space_mismatch():
    with pytest.raises(SpaceMismatch):
        verify_identity("mismatch", DELTA, act_omega(DELTA), [2])

def test_verify_duality_for_inverse_r():
    for n in range(5):
        T = Distribution.basis(n)
        assert verify_duality(f"inv_r_{n}", div_r(T), -div_x(T), [2, 3], trials=3).passed
    assert verify_duality("dr", act_dr(DELTA), Distribution.basis(1), [2, 3], trials=3).passed

def test_check_values():
    assert check_values("same", 1, 1).passed
    entry = check_values("different", 1, 2)
    assert not entry.passed and entry.note == "values differ"

# ========== Suite 부분 ==========

def test_oracle_config_validation():
    assert OracleConfig(dims=[5, 2, 5]).dims == [2, 5]
    with pytest.raises(ValidationError):
        OracleConfig(dims=[1])
    with pytest.raises(ValidationError):
        OracleConfig(trials=0)
    with pytest.raises(ValidationError):
        OracleConfig(kmax=-1)

def test_seed_comes_from_environment(monkeypatch):
    monkeypatch.setenv("SIGNUMCALC_SEED", "41")
    assert OracleConfig().seed == 41
    assert OracleConfig(seed=3).seed == 3

def test_there_are_eleven_suites():
    assert suite_names() == [
        "prop31", "prop32", "cor33", "cor34", "identities_x", "prop35",
        "examples_sec7", "properties_sec8", "remark_compositions", "homogeneity", "physics_sec5",
    ]

@pytest.mark.parametrize("alias, name", [
    ("radial_second_order", "prop31"),
    ("omega_dr_powers", "cor33"),
    ("x_powers", "identities_x"),
    ("spherical_physics", "physics_sec5"),
    ("homogeneity", "homogeneity"),
    ("cor34", "cor34"),
])
def test_suite_aliases(alias, name):
    assert resolve_suite(alias) == name
    assert set(SUITE_ALIASES.values()) <= set(SUITES)

@pytest.mark.parametrize("name", list(SUITES))
def test_every_suite_passes(name):
    report = run_suite(name, SMALL)
    assert report.suite == name
    assert report.entries
    assert report.passed, report.to_text()
    assert [entry.id for entry in report.entries] == sorted(entry.id for entry in report.entries)

def test_x_power_suite_includes_zero_powers():
    ids = {entry.id for entry in run_suite("identities_x", SMALL).entries}
    assert {"closed_i_k0_l0", "closed_i_k2_l0", "iterated_iii_k1_l0"} <= ids

def test_run_all_covers_every_suite():
    reports = run_all(SMALL.model_copy(update={"kmax": 1, "lmax": 1, "nmax": 3, "trials": 2}))
    assert [report.suite for report in reports] == suite_names()
    assert all(report.passed for report in reports)

def test_workers_do_not_change_the_report():
    single = run_suite("properties_sec8", SMALL)
    parallel = run_suite("properties_sec8", SMALL.model_copy(update={"workers": 4}))
    assert single.to_json_dict() == parallel.to_json_dict()

def test_unknown_suite():
    with pytest.raises(UnknownSuite):
        run_suite("prop99", SMALL)
    with pytest.raises(UnknownSuite):
        resolve_suite("")

def test_report_formats():
    report = VerifyReport(suites=[run_suite("omega_dr_powers", SMALL)])
    data = json.loads(report.to_json())
    assert data["schema"] == "1"
    assert data["passed"] is True
    assert data["suites"][0]["suite"] == "cor33"
    entry = data["suites"][0]["entries"][0]
    assert set(entry) >= {"id", "status", "lhs", "rhs", "dims", "seed"}
    assert entry["seed"] == 7
    assert report.to_markdown().startswith("### cor33")
    assert report.to_text().endswith("cor33: 6/6 passed")

def test_failures_are_reported():
    failing = SuiteReport(suite="demo", entries=[check_values("a", 1, 2), check_values("b", 1, 1)])
    assert not failing.passed
    assert [entry.id for entry in failing.failures()] == ["a"]
