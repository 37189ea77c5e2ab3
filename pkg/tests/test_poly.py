"""
┏━━━━━━━━━━━━━━━━━━━━━━━━━━┓
┃ Signumcalc Radial Engine ┃
┗━━━━━━━━━━━━━━━━━━━━━━━━━━┛
Tests of Poly
"""

# Libraries
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from Poly import (
    MultiPoly, RadialPoly, PairingValue, parse_poly, random_poly,
    dirac_apply, laplacian, dirac_power_at_zero, radial_deriv_at_zero, radial_laplacian,
    sphere_moment, sphere_moment_quadrature, spherical_mean0, spherical_mean1
)
from Utilities.error_tools import DomainError, ParseError

# ========== 다항식 부분 ==========

def test_parse_and_render():
    phi = parse_poly("3*x1^2*x2 - 1/2*x3", 3)
    assert phi.coefficient((2, 1, 0)) == 3
    assert phi.coefficient((0, 0, 1)) == Fraction(-1, 2)
    assert phi.render() == "3*x1^2*x2 - 1/2*x3"
    assert phi.to_json() == [[[2, 1, 0], "3"], [[0, 0, 1], "-1/2"]]

def test_parse_juxtaposition_and_leading_sign():
    assert parse_poly("-2 x1 x2 + 5", 2) == MultiPoly(2, {(1, 1): -2, (0, 0): 5})

@pytest.mark.parametrize("text", ["x4", "x1 +", "1/0", "x1^^2", "y1"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_poly(text, 3)

def test_derivatives():
    phi = parse_poly("x1^3*x2 + x2", 2)
    assert phi.derivative(0) == parse_poly("3*x1^2*x2", 2)
    assert dirac_apply(phi)[1] == parse_poly("x1^3 + 1", 2)
    assert laplacian(parse_poly("x1^2 + x2^2", 2)) == MultiPoly.constant(2, 4)

def test_dirac_power_at_zero():
    phi = parse_poly("x1^2 + 7*x2", 3)
    assert dirac_power_at_zero(phi, 0) == PairingValue.of_scalar(0)
    assert dirac_power_at_zero(phi, 1) == PairingValue.of_vector([0, 7, 0])
    assert dirac_power_at_zero(phi, 2) == PairingValue.of_scalar(-2)

def test_random_poly_is_reproducible():
    assert random_poly(3, 6, 11) == random_poly(3, 6, 11)
    assert random_poly(3, 6, 11).degree() <= 6
    with pytest.raises(DomainError):
        random_poly(3, -1, 0)

# ========== Pairing 값 부분 ==========

def test_pairing_value_zero_ignores_kind():
    assert PairingValue.of_scalar(0) == PairingValue.of_vector([0, 0])
    assert PairingValue.zero().is_zero()

def test_pairing_value_mixed():
    value = PairingValue.of_scalar(2) + PairingValue.of_vector([-1, 0, 0])
    assert value.is_mixed()
    assert value.render() == "2 + (-1, 0, 0)"

# ========== 구면 모멘트 부분 ==========

def test_sphere_moment_closed_form():
    assert sphere_moment((2, 0, 0), 3) == Fraction(1, 3)
    assert sphere_moment((2, 2, 0), 3) == Fraction(1, 15)
    assert sphere_moment((4, 0), 2) == Fraction(3, 8)
    assert sphere_moment((1, 1), 2) == 0
    with pytest.raises(DomainError):
        sphere_moment((0,), 1)

def test_sphere_moment_accepts_lists():
    assert sphere_moment([2, 2, 0], 3) == sphere_moment((2, 2, 0), 3) == Fraction(1, 15)

@pytest.mark.parametrize("alpha, m", [((2, 0), 3), ([2, 0, 0, 0], 3), ((-1, 1), 2)])
def test_sphere_moment_rejects_exponents_of_the_wrong_shape(alpha, m):
    with pytest.raises(DomainError):
        sphere_moment(alpha, m)

@pytest.mark.parametrize("m, tolerance", [(2, 1e-12), (3, 1e-10)])
def test_sphere_moment_against_quadrature(m, tolerance):
    for alpha in product(range(9), repeat=m):
        if sum(alpha) <= 8:
            assert abs(float(sphere_moment(alpha, m)) - sphere_moment_quadrature(alpha, m)) <= tolerance

def test_quadrature_dimension_check():
    with pytest.raises(DomainError):
        sphere_moment_quadrature((0, 0, 0, 0), 4)

# ========== 구면 평균 부분 ==========

def test_spherical_means_of_simple_polynomials():
    phi = parse_poly("5 + x1^2 + x2", 3)
    assert spherical_mean0(phi) == RadialPoly.build(3, {0: 5, 2: Fraction(1, 3)})
    assert spherical_mean1(phi) == RadialPoly.build(3, {1: [0, Fraction(1, 3), 0]}, vector=True)
    assert spherical_mean1(parse_poly("x1", 3)) == RadialPoly.build(3, {1: [Fraction(1, 3), 0, 0]}, vector=True)

def test_radial_derivative_at_zero():
    mean = RadialPoly.build(3, {0: 5, 2: Fraction(1, 3)})
    assert radial_deriv_at_zero(mean, 2) == PairingValue.of_scalar(Fraction(2, 3))

def test_radial_laplacian_rejects_odd_input():
    with pytest.raises(DomainError):
        radial_laplacian(RadialPoly.build(3, {1: 1}))

@settings(max_examples=40, deadline=None)
@given(st.integers(2, 5), st.integers(0, 10_000))
def test_spherical_mean_properties(m, seed):
    phi = random_poly(m, 8, seed)
    mean0, mean1 = spherical_mean0(phi), spherical_mean1(phi)
    assert mean0.is_even()
    assert mean1.is_odd()
    assert mean0.coefficient(0) == phi.value_at_zero()
    assert spherical_mean0(laplacian(phi)) == radial_laplacian(mean0)
