"""
┏━━━━━━━━━━━━━━━━━━━━━━━━━━┓
┃ Signumcalc Radial Engine ┃
┗━━━━━━━━━━━━━━━━━━━━━━━━━━┛
Radial Basis View
"""

# Libraries
from math import factorial

from Algebra import DimScalar, M, ZERO, odd_rising_coeff, rising_product
from Kernel.models import (
    GeneralizedFunction, Distribution, SignumDistribution, Space,
    RadialForm, RadialLabel, RadialTerm, render_terms
)
from Kernel.transitions import act_r, act_omega
from Utilities.error_tools import DomainError
from Utilities.logging_tools import *

logger = get_logger("Kernel_Radial")

RADIAL_FAMILIES: tuple[str, ...] = ("i", "ii", "iii", "iv")

# ========== 기저 변환 부분 ==========

# 기저 n 한 개를 radial 기저로 바꿀 때의 (라벨, 배율)
def _radial_factor(space: Space, n: int, dim: DimScalar) -> tuple[RadialLabel, DimScalar]:
    """
    d_{2k} = (-1)^k A_k ∂̄^{2k}δ, v_{2k+1} = (-1)^k A_k ∂̄^{2k+1}δ
    sv_{2k} = (-1)^k A_k s_{2k}, sd_{2k+1} = -(-1)^k A_k s_{2k+1}
    :return: radial 기저 1개가 canonical 기저 몇 개인지 (라벨, 배율)
    """
    k: int = n // 2
    scale: DimScalar = odd_rising_coeff(k, dim) * (-1) ** k
    if space is Space.DIST:
        return (RadialLabel.D if n % 2 == 0 else RadialLabel.V), scale
    if n % 2 == 0:
        return RadialLabel.SV, scale
    return RadialLabel.SD, -scale

# canonical 기저를 radial 기저로 바꾸는 기능
def to_radial(G: GeneralizedFunction, dim: DimScalar = M) -> RadialForm:
    """
    :param G: Distribution 또는 SignumDistribution
    :return: RadialForm (차수 오름차순)
    """
    terms: list[RadialTerm] = []
    for n, coefficient in G.items():
        label, scale = _radial_factor(G.space, n, dim)
        terms.append(RadialTerm(label, n, coefficient / scale))
    return RadialForm(G.space, tuple(terms))

# radial 기저를 canonical 기저로 바꾸는 기능
def from_radial(R: RadialForm, dim: DimScalar = M) -> GeneralizedFunction:
    target = GeneralizedFunction.for_space(R.space)
    pairs: list[tuple[int, DimScalar]] = []
    for term in R.terms:
        _, scale = _radial_factor(R.space, term.order, dim)
        pairs.append((term.order, term.coefficient * scale))
    return target.collect(pairs)

# ========== 출력 부분 ==========

# radial 기저 한 개의 표기
def radial_basis_text(label: RadialLabel, order: int) -> str:
    derivative: str = "" if order == 0 else ("dr" if order == 1 else f"dr^{order}")
    if label in (RadialLabel.V, RadialLabel.SV):
        return f"w {derivative} delta" if derivative else "w delta"
    return f"{derivative} delta" if derivative else "delta"

# radial 표기 문자열, 예) "-(1/m) * dr delta"
def radial_to_text(G: GeneralizedFunction | RadialForm, dim: DimScalar = M) -> str:
    form: RadialForm = G if isinstance(G, RadialForm) else to_radial(G, dim)
    return render_terms([(term.coefficient, radial_basis_text(term.label, term.order)) for term in form.terms])

# ========== r 거듭제곱 × radial 미분 부분 ==========

# r^p ∂_r^q δ 계수를 닫힌 형태로 계산하는 기능
def radial_power_coefficient(family: str, k: int, l: int, dim: DimScalar = M) -> tuple[DimScalar, int | None]:
    """
    i: r^{2l} ∂_r^{2k} δ, ii: ω r^{2l+1} ∂_r^{2k} δ, iii: ω r^{2l} ∂_r^{2k+1} δ, iv: r^{2l+1} ∂_r^{2k+1} δ
    결과는 모두 c ∂̄^j δ 형태의 distribution
    :param family: "i", "ii", "iii", "iv"
    :param k: radial 미분 번호 (k >= l)
    :param l: r 거듭제곱 번호
    :return: (계수, 결과 Dirac 차수), ii 에서 k = l 이면 (0, None)
    """
    if family not in RADIAL_FAMILIES:
        raise DomainError(f"Unknown radial power family: {family}", input=family)
    if l < 0 or k < l:
        raise DomainError(f"Radial power products need k >= l >= 0, got k={k}, l={l}", input=(k, l))

    sign: int = (-1) ** (k + l)
    odd_rising: DimScalar = rising_product(dim + 1, 2, k)

    if family == "i":
        return (
            odd_rising * rising_product(dim + (2 * k - 2 * l), 2, l) * sign / (2 ** (k - l) * factorial(k - l)),
            2 * k - 2 * l
        )
    if family == "ii":
        if k == l:
            return ZERO, None
        return (
            odd_rising * rising_product(dim + (2 * k - 2 * l), 2, l) * sign / (2 ** (k - l - 1) * factorial(k - l - 1)),
            2 * k - 2 * l - 1
        )
    if family == "iii":
        return (
            odd_rising * rising_product(dim + (2 * k - 2 * l + 2), 2, l) * sign / (2 ** (k - l) * factorial(k - l)),
            2 * k - 2 * l + 1
        )
    return (
        odd_rising * rising_product(dim + (2 * k - 2 * l), 2, l + 1) * (-sign) / (2 ** (k - l) * factorial(k - l)),
        2 * k - 2 * l
    )

# table --family prop35 이 출력하는 계수
prop35_coefficient = radial_power_coefficient

# 같은 곱을 엔진의 r / ω 작용으로 합성하는 기능
def radial_power_route(family: str, k: int, l: int, dim: DimScalar = M) -> GeneralizedFunction:
    """
    i: r^{2l} d_{2k}, ii: ω r^{2l+1} d_{2k}, iii: ω r^{2l} sd_{2k+1}, iv: r^{2l+1} sd_{2k+1}
    :return: Distribution
    """
    if family not in RADIAL_FAMILIES:
        raise DomainError(f"Unknown radial power family: {family}", input=family)
    if l < 0 or k < l:
        raise DomainError(f"Radial power products need k >= l >= 0, got k={k}, l={l}", input=(k, l))

    if family in ("i", "ii"):
        start: GeneralizedFunction = from_radial(RadialForm.single(RadialLabel.D, 2 * k), dim)
    else:
        start = from_radial(RadialForm.single(RadialLabel.SD, 2 * k + 1), dim)

    r_count: int = 2 * l + (1 if family in ("ii", "iv") else 0)
    result: GeneralizedFunction = start
    for _ in range(r_count):
        result = act_r(result, dim=dim)
    if family in ("ii", "iii"):
        result = act_omega(result, dim=dim)

    logger.debug(f"radial power family {family} k={k} l={l}: {result.render()}")
    return result

# 닫힌 형태 계수를 Distribution 으로 만드는 기능
def radial_power_distribution(family: str, k: int, l: int, dim: DimScalar = M) -> Distribution:
    coefficient, target = radial_power_coefficient(family, k, l, dim)
    return Distribution.zero() if target is None else Distribution.basis(target, coefficient)

# SIGN 결과를 radial 표기로 한 줄 더 보여줄 필요가 있는지 확인하는 기능
def has_alias(G: GeneralizedFunction) -> bool:
    return isinstance(G, SignumDistribution) and not G.is_zero()
