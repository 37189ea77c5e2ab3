"""
┏━━━━━━━━━━━━━━━━━━━━━━━━━━┓
┃ Signumcalc Radial Engine ┃
┗━━━━━━━━━━━━━━━━━━━━━━━━━━┛
Spherical Means
"""

# Libraries
from fractions import Fraction
from functools import lru_cache

import numpy as np
from numpy.polynomial.legendre import leggauss

from Poly.models import MultiPoly, RadialPoly, Exponent
from Utilities.check_tools import check_dimension
from Utilities.error_tools import DomainError
from Utilities.logging_tools import *

logger = get_logger("Poly_Spherical")

# (n-1)!! 계산 기능, (-1)!! = 1
def _double_factorial(n: int) -> int:
    result: int = 1
    while n > 1:
        result *= n
        n -= 2
    return result

# ========== 구면 모멘트 부분 ==========

# 단위구면 위 단항식의 정규화 평균 계산 기능
def sphere_moment(alpha: Exponent, m: int) -> Fraction:
    """
    (1/a_m) ∫ ω^α dS
    홀수 지수가 있으면 0, 아니면 ∏(α_i-1)!! / ∏_{j<|α|/2} (m+2j)
    :param alpha: 지수 다중지표 (길이 m, list 도 가능)
    :param m: 차원 (2 이상)
    :return: Fraction
    """
    check_dimension(m)
    alpha = tuple(alpha)
    if len(alpha) != m or any(a < 0 for a in alpha):
        raise DomainError(f"Exponent {alpha} does not fit dimension {m}", input=list(alpha))
    return _sphere_moment(alpha, m)

@lru_cache(maxsize=4096)
def _sphere_moment(alpha: tuple[int, ...], m: int) -> Fraction:
    if any(a % 2 for a in alpha):
        return Fraction(0)

    numerator: int = 1
    for a in alpha:
        numerator *= _double_factorial(a - 1)
    denominator: int = 1
    for j in range(sum(alpha) // 2):
        denominator *= m + 2 * j
    return Fraction(numerator, denominator)

# 단위구면 위 단항식 평균의 수치 적분 기능
def sphere_moment_quadrature(alpha: Exponent, m: int, nodes: int = 64) -> float:
    """
    m = 2: 원 위 균등 사다리꼴 규칙
    m = 3: cos θ 에 Gauss-Legendre, 방위각에 사다리꼴 규칙
    :param alpha: 지수 다중지표 (길이 m)
    :param m: 2 또는 3
    :param nodes: 방향별 node 개수
    :return: float 근삿값
    """
    alpha = tuple(alpha)
    if len(alpha) != m:
        raise DomainError(f"Exponent {alpha} does not fit dimension {m}", input=alpha)

    psi = np.linspace(0.0, 2.0 * np.pi, nodes + 1)[:-1]
    if m == 2:
        values = np.cos(psi) ** alpha[0] * np.sin(psi) ** alpha[1]
        return float(np.mean(values))

    if m == 3:
        z, w = leggauss(nodes)
        Az, Apsi = np.meshgrid(z, psi, indexing="ij")
        ring = np.sqrt(1.0 - Az ** 2)
        values = (ring * np.cos(Apsi)) ** alpha[0] * (ring * np.sin(Apsi)) ** alpha[1] * Az ** alpha[2]
        # dS / (4π) = dz dψ / (4π), ψ 방향은 평균으로 2π 를 흡수
        return float(np.sum(w[:, None] * values) / (2.0 * nodes))

    raise DomainError(f"Quadrature is only available for m = 2 or 3, got {m}", input=m)

# ========== 구면 평균 부분 ==========

# 첫 번째 종류 구면 평균 Σ⁰[φ](r) 계산 기능
def spherical_mean0(phi: MultiPoly) -> RadialPoly:
    """
    c x^α -> c · moment(α) · r^{|α|}
    :return: 짝수 scalar RadialPoly
    """
    result: dict[int, Fraction] = {}
    for exponent, coefficient in phi.items():
        moment: Fraction = sphere_moment(exponent, phi.m)
        if moment:
            power: int = sum(exponent)
            result[power] = result.get(power, Fraction(0)) + coefficient * moment
    return RadialPoly.build(phi.m, result)

# 두 번째 종류 구면 평균 Σ¹[φ](r) 계산 기능
def spherical_mean1(phi: MultiPoly) -> RadialPoly:
    """
    i 번째 성분 = (1/a_m) ∫ ω_i φ(rω) dS
    :return: 홀수 vector RadialPoly
    """
    result: dict[int, list[Fraction]] = {}
    for exponent, coefficient in phi.items():
        power: int = sum(exponent)
        for index in range(phi.m):
            raised = list(exponent)
            raised[index] += 1
            moment: Fraction = sphere_moment(tuple(raised), phi.m)
            if moment:
                row = result.setdefault(power, [Fraction(0)] * phi.m)
                row[index] += coefficient * moment
    return RadialPoly.build(phi.m, result, vector=True)
