"""
┏━━━━━━━━━━━━━━━━━━━━━━━━━━┓
┃ Signumcalc Radial Engine ┃
┗━━━━━━━━━━━━━━━━━━━━━━━━━━┛
Polynomial Calculus
"""

# Libraries
from fractions import Fraction
from math import factorial

from Poly.models import MultiPoly, VectorPoly, RadialPoly, PairingValue
from Utilities.error_tools import DomainError

# Dirac 연산자 성분 ∂_j φ 계산 기능
def dirac_apply(phi: MultiPoly) -> VectorPoly:
    """
    :param phi: MultiPoly
    :return: j 번째 성분이 ∂φ/∂x_j 인 VectorPoly
    """
    return VectorPoly(tuple(phi.derivative(index) for index in range(phi.m)))

# Laplace 연산자 Δφ 계산 기능
def laplacian(phi: MultiPoly) -> MultiPoly:
    result = MultiPoly(phi.m)
    for index in range(phi.m):
        result = result + phi.derivative(index).derivative(index)
    return result

# ∂̄ⁿφ 의 원점 값 계산 기능
def dirac_power_at_zero(phi: MultiPoly, n: int) -> PairingValue:
    """
    n 짝수: ((-Δ)^{n/2} φ)(0) scalar
    n 홀수: (∂̄(-Δ)^{(n-1)/2} φ)(0) m 성분 vector
    :param phi: MultiPoly
    :param n: 0 이상의 정수
    :return: PairingValue
    """
    if n < 0:
        raise DomainError(f"Dirac power must be non-negative, got {n}", input=n)

    reduced: MultiPoly = phi
    for _ in range(n // 2):
        reduced = -laplacian(reduced)
        if reduced.is_zero():
            break

    if n % 2 == 0:
        return PairingValue.of_scalar(reduced.value_at_zero())
    return PairingValue.of_vector(dirac_apply(reduced).value_at_zero())

# radial 다항식의 n 번째 도함수 원점 값 계산 기능
def radial_deriv_at_zero(P: RadialPoly, n: int) -> PairingValue:
    """
    n! × (r^n 의 계수)
    """
    if n < 0:
        raise DomainError(f"Derivative order must be non-negative, got {n}", input=n)
    value = P.coefficient(n)
    if P.vector:
        return PairingValue.of_vector(component * factorial(n) for component in value)
    return PairingValue.of_scalar(value * factorial(n))

# radial Laplace 연산자 ∂_r² + (m-1)(1/r)∂_r 계산 기능
def radial_laplacian(P: RadialPoly) -> RadialPoly:
    """
    r^j -> j(j+m-2) r^{j-2}
    :param P: 짝수 scalar RadialPoly
    """
    if P.vector or not P.is_even():
        raise DomainError("Radial Laplacian expects an even scalar radial polynomial", input=P.render())
    result: dict[int, Fraction] = {}
    for power, value in P.coefficients:
        factor: int = power * (power + P.m - 2)
        if factor:
            result[power - 2] = result.get(power - 2, Fraction(0)) + value * factor
    return RadialPoly.build(P.m, result)
