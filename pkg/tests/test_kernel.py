"""
┏━━━━━━━━━━━━━━━━━━━━━━━━━━┓
┃ Signumcalc Radial Engine ┃
┗━━━━━━━━━━━━━━━━━━━━━━━━━━┛
Tests of Kernel
"""

# Libraries
import pytest
from hypothesis import given, settings, strategies as st

from Algebra import DimScalar, M, ONE, odd_rising_coeff
from Kernel import (
    Space, Kind, RadialLabel, Distribution, SignumDistribution, RadialForm, RadialTerm,
    apply_dirac, apply_laplace, apply_euler, apply_gamma, mul_x, mul_x_pow, x_power_coefficient, x_power_identity,
    apply_omega_dr, apply_dr2, apply_inv_r_dr, div_x,
    act_r, act_dr, act_omega, div_r,
    to_radial, from_radial, radial_to_text, radial_power_coefficient, radial_power_route, radial_power_distribution,
    RADIAL_FAMILIES, has_alias, is_equal
)
from Utilities.error_tools import UnsupportedAction, SpaceMismatch, DomainError

DELTA = Distribution.delta()

def D(n: int, c=1) -> Distribution:
    return Distribution.basis(n, c)

def s(n: int, c=1) -> SignumDistribution:
    return SignumDistribution.basis(n, c)

def radial(label: RadialLabel, order: int):
    return from_radial(RadialForm.single(label, order))

# ========== 기저 / 표현 부분 ==========

def test_zero_coefficients_are_dropped():
    assert Distribution({0: 0, 2: M - M}).is_zero()
    assert Distribution({1: 3}).indices() == [1]

def test_kind_per_term():
    assert Distribution({0: 1, 1: 1}).kinds() == {Kind.SCALAR, Kind.VECTOR}
    assert s(0).kinds() == {Kind.VECTOR}
    assert s(1).kinds() == {Kind.SCALAR}

def test_spaces_do_not_mix():
    with pytest.raises(SpaceMismatch):
        DELTA + s(0)
    assert DELTA != s(0)

def test_is_equal():
    assert is_equal(D(2, (M * M - 1) / (M - 1)), D(2, M + 1))
    assert not is_equal(D(2, M), D(2, M + 1))
    assert not is_equal(Distribution.zero(), SignumDistribution.zero())
    assert is_equal(act_dr(DELTA), s(1, -1))

def test_negative_index_rejected():
    with pytest.raises(DomainError):
        Distribution({-1: 1})

def test_render():
    assert DELTA.render() == "delta"
    assert Distribution.zero().render() == "0"
    assert Distribution({0: 2, 1: -1, 3: M}).render() == "2 * delta - D delta + m * D^3 delta"
    assert s(1, -1).render() == "-s[1]"

def test_specialize():
    assert D(2, (M + 1) / 2).specialize(3) == D(2, 2)

# ========== 고전 연산자 부분 ==========

def test_dirac_and_laplace():
    assert apply_dirac(DELTA) == D(1)
    assert apply_laplace(DELTA) == D(2, -1)

def test_euler_homogeneity():
    assert apply_euler(D(3)) == D(3, -(M + 3))

def test_gamma_on_scalar_terms_is_zero():
    assert apply_gamma(D(4)).is_zero()
    assert apply_gamma(D(2), beltrami=True).is_zero()
    with pytest.raises(UnsupportedAction):
        apply_gamma(D(1))

def test_mul_x():
    assert mul_x(DELTA).is_zero()
    assert mul_x(D(1)) == D(0, M)
    assert mul_x(D(2)) == D(1, 2)
    assert mul_x_pow(DELTA, 2).is_zero()

@pytest.mark.parametrize("n", range(0, 9))
def test_x_power_closed_form_matches_iteration(n):
    for p in range(1, n + 2):
        expected = D(n)
        for _ in range(p):
            expected = mul_x(expected)
        assert mul_x_pow(D(n), p) == expected

def test_x_power_zero_is_identity():
    value = D(3, M + 1) + D(0, 2)
    assert mul_x_pow(value, 0) == value
    assert x_power_coefficient(4, 0) == (DimScalar(1), 4)
    assert mul_x_pow(D(2), 0) == Distribution.basis(2) * x_power_identity("i", 1, 0)[0]
    with pytest.raises(DomainError):
        mul_x_pow(DELTA, -1)

def test_x_power_family_ii_vanishes_when_k_equals_l():
    assert x_power_identity("ii", 2, 2) == (DimScalar(0), None)
    coefficient, target = x_power_coefficient(4, 5)
    assert target is None

def test_x_power_identity_unknown_family():
    with pytest.raises(DomainError):
        x_power_identity("v", 1, 0)

def test_second_order_rules():
    assert apply_dr2(DELTA) == D(2, -(M + 1) / 2)
    assert apply_inv_r_dr(DELTA) == D(2, DimScalar(1) / 2)
    with pytest.raises(UnsupportedAction):
        apply_inv_r_dr(D(1))

def test_omega_dr_rules():
    assert apply_omega_dr(DELTA) == D(1)
    assert apply_omega_dr(D(1)) == D(2, (M + 1) / 2)

def test_div_x_inverts_mul_x():
    for n in range(6):
        assert mul_x(div_x(D(n))) == D(n)

# ========== 공간 전이 부분 ==========

def test_omega_squares_to_minus_one():
    for n in range(5):
        assert act_omega(act_omega(D(n))) == -D(n)
        assert act_omega(act_omega(s(n))) == -s(n)

def test_r_on_delta_and_omega_delta_is_zero():
    assert act_r(DELTA) == SignumDistribution.zero()
    assert act_r(s(0)) == Distribution.zero()

def test_dr_delta_is_minus_s1():
    assert act_dr(DELTA) == s(1, -1)

def test_r_dirac_delta():
    assert act_r(D(1)) == s(0, -M)

def test_r_laplace_delta():
    assert act_r(apply_laplace(DELTA)) == act_dr(DELTA).scale(-2)

def test_inverse_r_on_delta():
    assert div_r(DELTA) == act_dr(DELTA).scale(DimScalar(-1) / M)
    expected = act_dr(apply_dr2(DELTA)).scale(DimScalar(-1) / (M * (M + 1) * (M + 2)))
    assert div_r(DELTA, 3) == expected

def test_r_undoes_inverse_r():
    for n in range(6):
        assert act_r(div_r(D(n))) == D(n)

def test_inverse_r_rejections():
    with pytest.raises(UnsupportedAction):
        div_r(s(0))
    with pytest.raises(UnsupportedAction):
        div_r(DELTA, 2)
    with pytest.raises(UnsupportedAction):
        div_r(D(1), 3)
    with pytest.raises(DomainError):
        div_r(DELTA, 0)

def test_classical_operators_reject_signum_input():
    with pytest.raises(UnsupportedAction):
        mul_x(s(0))
    with pytest.raises(UnsupportedAction):
        apply_dr2(s(1))

@pytest.mark.parametrize("n", range(1, 8))
def test_compositions(n):
    T = D(n)
    assert act_r(act_dr(T)) == apply_euler(T)
    assert act_dr(act_r(T)) == apply_euler(T) + T
    assert act_dr(act_dr(T)) == apply_dr2(T)
    assert act_omega(act_dr(T)) == apply_omega_dr(T) == act_dr(act_omega(T))
    assert act_r(act_omega(T)) == mul_x(T) == act_omega(act_r(T))
    assert act_r(act_dr(s(n))) == s(n, -(M + n))

@settings(max_examples=60, deadline=None)
@given(
    st.dictionaries(st.integers(0, 8), st.integers(-5, 5), max_size=4),
    st.dictionaries(st.integers(0, 8), st.integers(-5, 5), max_size=4),
    st.integers(-4, 4)
)
def test_transitions_are_linear(left, right, factor):
    A, B = Distribution(left), Distribution(right)
    for action in (act_r, act_dr, act_omega, mul_x, apply_omega_dr, apply_dr2, div_x):
        assert action(A + B.scale(factor)) == action(A) + action(B).scale(factor)

@settings(max_examples=40, deadline=None)
@given(st.dictionaries(st.integers(0, 8), st.integers(-5, 5), max_size=4), st.integers(2, 9))
def test_rules_commute_with_fixing_the_dimension(terms, m0):
    T = Distribution(terms)
    fixed = DimScalar(m0)
    for action in (act_r, act_dr, apply_omega_dr, apply_dr2, div_x):
        assert action(T).specialize(m0) == action(T.specialize(m0), dim=fixed)

# ========== Radial 표기 부분 ==========

def test_radial_labels_in_canonical_basis():
    assert radial(RadialLabel.D, 2) == D(2, -odd_rising_coeff(1))
    assert radial(RadialLabel.V, 3) == D(3, -odd_rising_coeff(1))
    assert radial(RadialLabel.SV, 0) == s(0)
    assert radial(RadialLabel.SD, 1) == s(1, -1)

def test_radial_round_trip():
    for G in (D(4, M), s(3, 2), Distribution({0: 1, 1: 1, 2: 1})):
        assert from_radial(to_radial(G)) == G

def test_radial_term_parity_is_checked():
    with pytest.raises(DomainError):
        RadialTerm(RadialLabel.D, 1, ONE)
    with pytest.raises(SpaceMismatch):
        RadialForm(Space.DIST, (RadialTerm(RadialLabel.SD, 1, ONE),))

def test_radial_text():
    assert radial_to_text(act_dr(DELTA)) == "dr delta"
    assert radial_to_text(div_r(DELTA)) == "-(1/m) * dr delta"
    assert radial_to_text(act_omega(DELTA)) == "w delta"
    assert radial_to_text(apply_dr2(DELTA)) == "dr^2 delta"
    assert has_alias(act_omega(DELTA))
    assert not has_alias(DELTA)

def test_radial_labels_transition():
    d = lambda n: radial(RadialLabel.D, n)
    v = lambda n: radial(RadialLabel.V, n)
    sd = lambda n: radial(RadialLabel.SD, n)
    sv = lambda n: radial(RadialLabel.SV, n)
    for k in range(4):
        assert act_dr(d(2 * k)) == sd(2 * k + 1)
        assert act_dr(sv(2 * k)) == v(2 * k + 1)
        assert act_omega(v(2 * k + 1)) == -sd(2 * k + 1)
        assert apply_dr2(d(2 * k)) == d(2 * k + 2)
        assert act_r(v(2 * k + 1)) == sv(2 * k).scale(-(M + 2 * k))

# ========== r 거듭제곱 곱 부분 ==========

@pytest.mark.parametrize("family", RADIAL_FAMILIES)
def test_radial_power_route_matches_closed_form(family):
    for k in range(5):
        for l in range(k + 1):
            assert radial_power_route(family, k, l) == radial_power_distribution(family, k, l)

def test_radial_power_examples():
    # r^2 ∂_r^2 δ = m(m+1) δ, r ∂_r δ = -m δ
    assert radial_power_coefficient("i", 1, 1) == (M * (M + 1), 0)
    assert radial_power_coefficient("iv", 0, 0) == (-M, 0)
    assert radial_power_coefficient("ii", 1, 1) == (DimScalar(0), None)

def test_radial_power_rejects_bad_indices():
    with pytest.raises(DomainError):
        radial_power_coefficient("i", 1, 2)
    with pytest.raises(DomainError):
        radial_power_route("x", 1, 0)
