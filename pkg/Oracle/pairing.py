"""
┏━━━━━━━━━━━━━━━━━━━━━━━━━━┓
┃ Signumcalc Radial Engine ┃
┗━━━━━━━━━━━━━━━━━━━━━━━━━━┛
Exact Pairings
"""

# Libraries
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Callable

from Algebra import DimScalar, M, rising_product
from Kernel import GeneralizedFunction, Distribution, SignumDistribution
from Poly import (
    MultiPoly, RadialPoly, PairingValue,
    dirac_power_at_zero, radial_deriv_at_zero, spherical_mean0, spherical_mean1, random_poly
)
from Utilities.error_tools import DomainError, KindMismatch, SpaceMismatch
from Utilities.logging_tools import *

logger = get_logger("Oracle_Pairing")

# ========== 상수 부분 ==========

# C(l) = 2^{2l} l!/(2l)! · (m/2)(m/2+1)...(m/2+l-1) 계산 기능
def c_constant(l: int, m: int) -> Fraction:
    """
    :param l: 0 이상의 정수
    :param m: 차원 (2 이상)
    :return: Fraction, C(0) = 1
    """
    if m < 2:
        raise DomainError(f"C(l) needs m >= 2, got {m}", input=m)
    if l < 0:
        raise DomainError(f"C(l) needs l >= 0, got {l}", input=l)
    value = Fraction(2 ** (2 * l) * factorial(l), factorial(2 * l))
    for j in range(l):
        value *= Fraction(m, 2) + j
    return value

# m(m+1)...(m+n-1)/n! 계산 기능
def physics_coefficient(n: int, dim: DimScalar = M) -> DimScalar:
    """
    ⟨d_n 또는 v_n, φ⟩ = (-1)^n · 이 계수 · ∂_r^n Σ^{n mod 2}[φ](0)
    """
    if n < 0:
        raise DomainError(f"physics_coefficient needs n >= 0, got {n}", input=n)
    return rising_product(dim, 1, n) / factorial(n)

# ========== 시험 다항식 부분 ==========

# seed 별 시험 다항식 목록 (i 번째는 seed + i)
@lru_cache(maxsize=256)
def sample_polys(m: int, trials: int, max_degree: int, seed: int) -> tuple[MultiPoly, ...]:
    return tuple(random_poly(m, max_degree, seed + index) for index in range(trials))

@lru_cache(maxsize=None)
def _spherical_means(phi: MultiPoly) -> tuple[RadialPoly, RadialPoly]:
    return spherical_mean0(phi), spherical_mean1(phi)

# ⟨∂̄ⁿδ, φ⟩ = (-1)ⁿ (∂̄ⁿφ)(0)
@lru_cache(maxsize=None)
def cartesian_basis_value(phi: MultiPoly, n: int) -> PairingValue:
    return dirac_power_at_zero(phi, n).scale((-1) ** n)

# 구면 평균을 거친 ⟨∂̄ⁿδ, φ⟩
@lru_cache(maxsize=None)
def spherical_basis_value(phi: MultiPoly, n: int) -> PairingValue:
    """
    n = 2l: (-1)^l C(l) ∂_r^{2l} Σ⁰[φ](0)
    n = 2l+1: (-1)^l C(l+1) · (-1) · ∂_r^{2l+1} Σ¹[φ](0)
    """
    mean0, mean1 = _spherical_means(phi)
    l: int = n // 2
    if n % 2 == 0:
        return radial_deriv_at_zero(mean0, n).scale((-1) ** l * c_constant(l, phi.m))
    return radial_deriv_at_zero(mean1, n).scale(-((-1) ** l) * c_constant(l + 1, phi.m))

# ========== Pairing 부분 ==========

def _check_sample(phi: MultiPoly, m: int) -> None:
    if phi.m != m:
        raise DomainError(f"Test polynomial lives in dimension {phi.m}, not {m}", input=phi.render())

# 항별 기저 값을 계수와 곱해 더하는 기능
def _combine(G: GeneralizedFunction, phi: MultiPoly, m: int, basis_value: Callable[[MultiPoly, int], PairingValue],
             sign: int, allow_mixed: bool) -> PairingValue:
    total = PairingValue.zero()
    for n, coefficient in G.items():
        total = total + basis_value(phi, n).scale(sign * coefficient.evaluate(m))
    if len(G.kinds()) > 1 and not allow_mixed:
        logger.warning(f"mixed-kind pairing for {G.render()}")
        raise KindMismatch("Scalar and vector terms cannot be summed into one value", value=total, input=G.render())
    return total

def _require(G: GeneralizedFunction, expected: type, route: str) -> None:
    if not isinstance(G, expected):
        raise SpaceMismatch(f"{route} pairing expects a {expected.space.value} element", input=G.render())

# 직교 좌표 경로 pairing 기능
def pair_cartesian(T: Distribution, phi: MultiPoly, m: int, allow_mixed: bool = False) -> PairingValue:
    """
    Σ c_n(m) (-1)ⁿ (∂̄ⁿφ)(0)
    :param T: Distribution
    :param phi: 차원 m 의 시험 다항식
    :param m: 구체적인 차원
    :param allow_mixed: True 이면 scalar / vector 부분을 나눠서 반환
    :return: PairingValue
    """
    _require(T, Distribution, "cartesian")
    _check_sample(phi, m)
    return _combine(T, phi, m, cartesian_basis_value, 1, allow_mixed)

# 구면 평균 경로 pairing 기능
def pair_spherical(T: Distribution, phi: MultiPoly, m: int, allow_mixed: bool = False) -> PairingValue:
    _require(T, Distribution, "spherical")
    _check_sample(phi, m)
    return _combine(T, phi, m, spherical_basis_value, 1, allow_mixed)

# signumdistribution 과 ωφ 의 pairing 기능
def pair_signum(S: SignumDistribution, phi: MultiPoly, m: int, allow_mixed: bool = False) -> PairingValue:
    """
    ⟨S, ωφ⟩ = -Σ c_n(m) ⟨∂̄ⁿδ, φ⟩, 시험 대상 ωφ 는 φ 로부터 암묵적으로 만듦
    """
    _require(S, SignumDistribution, "signum")
    _check_sample(phi, m)
    return _combine(S, phi, m, cartesian_basis_value, -1, allow_mixed)

def pair_signum_spherical(S: SignumDistribution, phi: MultiPoly, m: int, allow_mixed: bool = False) -> PairingValue:
    _require(S, SignumDistribution, "signum")
    _check_sample(phi, m)
    return _combine(S, phi, m, spherical_basis_value, -1, allow_mixed)

# 공간에 맞는 모든 경로의 pairing 값
def pair_routes(G: GeneralizedFunction, phi: MultiPoly, m: int) -> dict[str, PairingValue]:
    if isinstance(G, Distribution):
        return {
            "cartesian": pair_cartesian(G, phi, m, allow_mixed=True),
            "spherical": pair_spherical(G, phi, m, allow_mixed=True),
        }
    return {
        "cartesian": pair_signum(G, phi, m, allow_mixed=True),
        "spherical": pair_signum_spherical(G, phi, m, allow_mixed=True),
    }

# radial 기저 d_n / v_n 의 물리 형태 pairing 기능
def pair_physics(n: int, phi: MultiPoly) -> PairingValue:
    """
    (-1)ⁿ · m(m+1)...(m+n-1)/n! · ∂_rⁿ Σ^{n mod 2}[φ](0)
    """
    mean0, mean1 = _spherical_means(phi)
    coefficient: Fraction = physics_coefficient(n).evaluate(phi.m)
    mean: RadialPoly = mean0 if n % 2 == 0 else mean1
    return radial_deriv_at_zero(mean, n).scale((-1) ** n * coefficient)
