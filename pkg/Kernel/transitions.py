"""
┏━━━━━━━━━━━━━━━━━━━━━━━━━━┓
┃ Signumcalc Radial Engine ┃
┗━━━━━━━━━━━━━━━━━━━━━━━━━━┛
Space Transitions (r, ∂_r, ω, 1/r)
"""

# Libraries
from Algebra import DimScalar, M
from Kernel.models import GeneralizedFunction, Distribution, SignumDistribution
from Kernel.classical import require_distribution, mul_x, apply_omega_dr, div_x
from Utilities.error_tools import UnsupportedAction, DomainError
from Utilities.logging_tools import *

logger = get_logger("Kernel_Transitions")

# 같은 계수표를 다른 공간의 기저로 옮기는 기능
def _as_signum(T: Distribution) -> SignumDistribution:
    return SignumDistribution(T.terms)

def _as_distribution(S: SignumDistribution) -> Distribution:
    return Distribution(S.terms)

# ========== ω 부분 ==========

# ω 곱하기 기능
def act_omega(G: GeneralizedFunction, dim: DimScalar = M) -> GeneralizedFunction:
    """
    ∂̄ⁿδ -> sₙ, sₙ -> -∂̄ⁿδ (ω² = -1)
    :param G: Distribution 또는 SignumDistribution
    :return: 반대 공간의 결과
    """
    if isinstance(G, Distribution):
        return _as_signum(G)
    return -_as_distribution(G)

# ========== r 부분 ==========

# r 곱하기 기능
def act_r(G: GeneralizedFunction, dim: DimScalar = M) -> GeneralizedFunction:
    """
    DIST: rT = -ω(xT), 따라서 rδ = 0
    SIGN: r sₙ = x ∂̄ⁿδ, 따라서 r(ωδ) = 0
    """
    if isinstance(G, Distribution):
        return -act_omega(mul_x(G, dim=dim), dim=dim)
    return mul_x(_as_distribution(G), dim=dim)

# ========== ∂_r 부분 ==========

# radial 미분 기능
def act_dr(G: GeneralizedFunction, dim: DimScalar = M) -> GeneralizedFunction:
    """
    DIST: ∂_r T = -ω((ω∂_r)T)
    SIGN: ∂_r sₙ = (ω∂_r) ∂̄ⁿδ
    """
    if isinstance(G, Distribution):
        return -act_omega(apply_omega_dr(G, dim=dim), dim=dim)
    return apply_omega_dr(_as_distribution(G), dim=dim)

# ========== 1/r 부분 ==========

# 1/r^p 나눗셈 기능
def div_r(T: GeneralizedFunction, power: int = 1, dim: DimScalar = M) -> SignumDistribution:
    """
    p = 1: (1/r)T = ω((1/x)T), 즉 d_{2k} -> -1/(m+2k) sd_{2k+1}, v_{2k+1} -> -1/(m+2k+1) sv_{2k+2}
    p = 2k+1 > 1: c·δ 에서만 정의, -c/(m(m+1)...(m+2k)) sd_{2k+1}
    :param T: Distribution
    :param power: 홀수 양의 정수
    :return: SignumDistribution
    """
    require_distribution(T, "div_r")
    if power < 1:
        raise DomainError(f"div_r needs a positive power, got {power}", input=power)
    if power % 2 == 0:
        logger.warning(f"div_r rejected even power {power}")
        raise UnsupportedAction(f"1/r^{power} is not defined", input=T.render())

    if power == 1:
        return act_omega(div_x(T, dim=dim), dim=dim)

    if T.indices() not in ([], [0]):
        logger.warning(f"div_r power {power} rejected input {T.render()}")
        raise UnsupportedAction(f"1/r^{power} is only defined on multiples of delta", input=T.render())

    result: GeneralizedFunction = T
    for _ in range(power):
        result = div_x(result, dim=dim)
    sign: int = -1 if (power // 2) % 2 == 1 else 1
    return act_omega(result, dim=dim).scale(sign)
