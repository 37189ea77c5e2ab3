"""
┏━━━━━━━━━━━━━━━━━━━━━━━━━━┓
┃ Signumcalc Radial Engine ┃
┗━━━━━━━━━━━━━━━━━━━━━━━━━━┛
Tests of Algebra
"""

# Libraries
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from Algebra import DimScalar, M, ZERO, ONE, dimscalar_arith, dim_eval, rising_product, odd_rising_coeff
from Utilities.error_tools import DivisionByZero, PoleAtDimension, DomainError

# ========== 산술 부분 ==========

def test_inverse_pair_cancels():
    assert (M + 1) / 2 * (DimScalar(2) / (M + 1)) == ONE

def test_canonical_form_is_structural():
    left = (M * M - 1) / (M - 1)
    assert left == M + 1
    assert hash(left) == hash(M + 1)

def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        M / ZERO

def test_zero_is_falsy():
    assert not ZERO
    assert M - M == ZERO
    assert (M - M).is_zero()

def test_named_arithmetic():
    assert dimscalar_arith(M, ONE, "add") == M + 1
    assert dimscalar_arith(M, ONE, "sub") == M - 1
    assert dimscalar_arith(M, M, "mul") == M ** 2
    assert dimscalar_arith(M, M, "div") == ONE
    with pytest.raises(DomainError):
        dimscalar_arith(M, M, "pow")

def test_negative_power():
    assert M ** -2 * M ** 2 == ONE

def test_immutable():
    with pytest.raises(AttributeError):
        M._value = 3

def test_constants_hash_like_their_value():
    assert DimScalar(3) == 3 and hash(DimScalar(3)) == hash(3)
    half = DimScalar(1) / 2
    assert half == Fraction(1, 2) and hash(half) == hash(Fraction(1, 2))
    assert {DimScalar(2): "two"}[2] == "two"
    assert Fraction(1, 2) in {half}
    assert len({DimScalar(2), 2, Fraction(2)}) == 1

# ========== 구조 부분 ==========

def test_coefficient_lists():
    value = (M + 1) / 2
    assert value.numerator_coefficients() == [1, 1]
    assert value.denominator_coefficients() == [2]
    assert ZERO.numerator_coefficients() == [0]

@pytest.mark.parametrize("value, degree", [
    (ZERO, 0),
    (DimScalar(7), 0),
    (M * M - 1, 2),
    (DimScalar(1) / (M * (M + 2)), 2),
    ((M + 1) ** 5 / (M - 3), 5),
])
def test_degree(value, degree):
    assert value.degree() == degree

def test_height():
    assert DimScalar(1024).height() == 11
    assert (M + 1).height() == 1
    assert (DimScalar(1) / 255).height() == 8

# ========== 평가 부분 ==========

def test_evaluate_at_dimension():
    assert ((M + 1) / 2).evaluate(3) == Fraction(2)
    assert dim_eval(DimScalar(1) / (M * (M + 2)), 2) == Fraction(1, 8)

def test_pole_at_dimension():
    with pytest.raises(PoleAtDimension):
        (DimScalar(1) / (M - 2)).evaluate(2)

def test_constant_as_fraction():
    assert DimScalar(Fraction(3, 4)).as_fraction() == Fraction(3, 4)
    with pytest.raises(DomainError):
        M.as_fraction()

@settings(max_examples=200, deadline=None)
@given(
    st.integers(-20, 20), st.integers(-20, 20), st.integers(1, 9), st.integers(2, 12)
)
def test_arithmetic_commutes_with_evaluation(a, b, c, m0):
    # (a m + b) / (m + c) 를 m0 에서 평가해도 결과가 같아야 함
    x = (M * a + b) / (M + c)
    y = M * M - c
    assert (x + y).evaluate(m0) == x.evaluate(m0) + y.evaluate(m0)
    assert (x * y).evaluate(m0) == x.evaluate(m0) * y.evaluate(m0)
    assert (x - y).evaluate(m0) == x.evaluate(m0) - y.evaluate(m0)
    if y.evaluate(m0) != 0:
        assert (x / y).evaluate(m0) == x.evaluate(m0) / y.evaluate(m0)

# ========== 상승곱 부분 ==========

def test_rising_product_empty():
    assert rising_product(M, 1, 0) == ONE

def test_rising_product_values():
    assert rising_product(M, 1, 3) == M * (M + 1) * (M + 2)
    assert rising_product(2, 2, 3) == DimScalar(48)

def test_rising_product_negative_count():
    with pytest.raises(DomainError):
        rising_product(M, 1, -1)

def test_odd_rising_coefficient():
    assert odd_rising_coeff(0) == ONE
    assert odd_rising_coeff(1) == (M + 1) / 2
    assert odd_rising_coeff(2) == (M + 1) * (M + 3) / 8
    assert odd_rising_coeff(2, DimScalar(3)) == DimScalar(3)

# ========== 출력 부분 ==========

@pytest.mark.parametrize("value, text", [
    (M, "m"),
    (DimScalar(0), "0"),
    (DimScalar(Fraction(-3, 2)), "-3/2"),
    (-(M + 1) / 2, "-(m+1)/2"),
    ((M + 1) * (M + 3) / 8, "(m+1)*(m+3)/8"),
    (DimScalar(1) / (M * (M + 1)), "1/(m*(m+1))"),
])
def test_render(value, text):
    assert value.render() == text

def test_render_coefficient_wraps_pure_denominators():
    assert (DimScalar(-1) / M).render_coefficient() == "-(1/m)"
    assert ((M + 1) / 2).render_coefficient() == "(m+1)/2"
