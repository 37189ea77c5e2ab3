"""
┏━━━━━━━━━━━━━━━━━━━━━━━━━━┓
┃ Signumcalc Radial Engine ┃
┗━━━━━━━━━━━━━━━━━━━━━━━━━━┛
Classical Operators
"""

# Libraries
from Algebra import DimScalar, M, ZERO, rising_product
from Kernel.models import GeneralizedFunction, Distribution
from Utilities.error_tools import UnsupportedAction, DomainError
from Utilities.logging_tools import *

logger = get_logger("Kernel_Classical")

# DIST 공간 입력인지 확인하는 기능
def require_distribution(T: GeneralizedFunction, action: str) -> Distribution:
    if not isinstance(T, Distribution):
        logger.warning(f"{action} rejected a {T.space.value} input")
        raise UnsupportedAction(f"{action} is only defined on distributions", input=T.render())
    return T

# ========== Dirac / Laplace / Euler / Gamma 부분 ==========

# Dirac 연산자 ∂̄ 적용 기능
def apply_dirac(T: GeneralizedFunction, dim: DimScalar = M) -> Distribution:
    """
    ∂̄ⁿδ -> ∂̄ⁿ⁺¹δ
    :param T: Distribution
    :param dim: 차원 (사용하지 않지만 다른 규칙과 호출 형태를 맞춤)
    :return: Distribution
    """
    require_distribution(T, "apply_dirac")
    return T.map_terms(lambda n, c: [(n + 1, c)])

# Laplace 연산자 Δ = -∂̄² 적용 기능
def apply_laplace(T: GeneralizedFunction, dim: DimScalar = M) -> Distribution:
    require_distribution(T, "apply_laplace")
    return T.map_terms(lambda n, c: [(n + 2, -c)])

# Euler 연산자 E = r∂_r 적용 기능
def apply_euler(T: GeneralizedFunction, dim: DimScalar = M) -> Distribution:
    """
    n 번째 항에 -(m+n) 을 곱함 (동차 차수 -m-n)
    """
    require_distribution(T, "apply_euler")
    return T.map_terms(lambda n, c: [(n, -(dim + n) * c)])

# Gamma 연산자 (또는 Laplace-Beltrami) 적용 기능
def apply_gamma(T: GeneralizedFunction, beltrami: bool = False, dim: DimScalar = M) -> Distribution:
    """
    구면대칭 (짝수 차수) 항에서 0, 벡터 항은 정의되지 않음
    :param T: Distribution
    :param beltrami: True 이면 Laplace-Beltrami 연산자로 취급 (결과 동일)
    :return: 0 Distribution
    """
    name: str = "apply_laplace_beltrami" if beltrami else "apply_gamma"
    require_distribution(T, name)
    odd = [n for n in T.indices() if n % 2 == 1]
    if odd:
        logger.warning(f"{name} rejected vector-kind terms {odd}")
        raise UnsupportedAction(f"{name} is not defined on vector-kind terms", input=T.render())
    return Distribution.zero()

# ========== x 곱셈 부분 ==========

# x 한 번 곱하기의 항별 계수
def _x_factor(n: int, dim: DimScalar) -> DimScalar:
    # x ∂̄^{2k}δ = 2k ∂̄^{2k-1}δ, x ∂̄^{2k+1}δ = (m+2k) ∂̄^{2k}δ
    return DimScalar(n) if n % 2 == 0 else dim + (n - 1)

# 벡터 x 곱하기 기능
def mul_x(T: GeneralizedFunction, dim: DimScalar = M) -> Distribution:
    require_distribution(T, "mul_x")
    return T.map_terms(lambda n, c: [(n - 1, _x_factor(n, dim) * c)] if n > 0 else [])

# x^p ∂̄ⁿδ 의 계수와 결과 차수를 닫힌 형태로 계산하는 기능
def x_power_coefficient(n: int, p: int, dim: DimScalar = M) -> tuple[DimScalar, int | None]:
    """
    x^p ∂̄ⁿδ = c ∂̄^{n-p}δ
    :param n: Dirac 거듭제곱 차수
    :param p: x 의 거듭제곱 (0 이상)
    :return: (계수, 결과 차수), p > n 이면 (0, None)
    """
    if n < 0 or p < 0:
        raise DomainError(f"x_power_coefficient needs n, p >= 0, got n={n}, p={p}", input=(n, p))
    if p > n:
        return ZERO, None

    # 지나가는 차수 n, n-1, ..., n-p+1 을 홀짝으로 나눔
    lowest: int = n - p + 1
    lowest_odd: int = lowest if lowest % 2 == 1 else lowest + 1
    lowest_even: int = lowest if lowest % 2 == 0 else lowest + 1
    odd_count: int = len(range(lowest_odd, n + 1, 2))
    even_count: int = len(range(lowest_even, n + 1, 2))

    coefficient = rising_product(dim + (lowest_odd - 1), 2, odd_count) * rising_product(lowest_even, 2, even_count)
    return coefficient, n - p

# x 거듭제곱 항등식 (i)~(iv) 의 계수를 그대로 계산하는 기능
def x_power_identity(family: str, k: int, l: int, dim: DimScalar = M) -> tuple[DimScalar, int | None]:
    """
    i: x^{2l} ∂̄^{2k}δ, ii: x^{2l+1} ∂̄^{2k}δ, iii: x^{2l} ∂̄^{2k+1}δ, iv: x^{2l+1} ∂̄^{2k+1}δ
    :param family: "i", "ii", "iii", "iv"
    :param k: 미분 차수 번호 (k >= l)
    :param l: x 거듭제곱 번호
    :return: (계수, 결과 차수), 계수가 0 이면 결과 차수는 None
    """
    if l < 0 or k < l:
        raise DomainError(f"x-power identities need k >= l >= 0, got k={k}, l={l}", input=(k, l))

    # (2k)(2k-2)...(2k-2l+2) 과 (m+2k-2)...(m+2k-2l)
    evens: DimScalar = rising_product(2 * k - 2 * l + 2, 2, l)
    shifted: DimScalar = rising_product(dim + (2 * k - 2 * l), 2, l)

    if family == "i":
        coefficient, target = evens * shifted, 2 * k - 2 * l
    elif family == "ii":
        coefficient, target = rising_product(2 * k - 2 * l, 2, l + 1) * shifted, 2 * k - 2 * l - 1
    elif family == "iii":
        coefficient, target = evens * rising_product(dim + (2 * k - 2 * l + 2), 2, l), 2 * k - 2 * l + 1
    elif family == "iv":
        coefficient, target = evens * rising_product(dim + (2 * k - 2 * l), 2, l + 1), 2 * k - 2 * l
    else:
        raise DomainError(f"Unknown x-power family: {family}", input=family)

    if coefficient.is_zero():
        return ZERO, None
    return coefficient, target

# x^p 곱하기 기능
def mul_x_pow(T: GeneralizedFunction, p: int, dim: DimScalar = M) -> Distribution:
    require_distribution(T, "mul_x_pow")
    if p < 0:
        raise DomainError(f"mul_x_pow needs a non-negative power, got {p}", input=p)

    def rule(n: int, c: DimScalar):
        coefficient, target = x_power_coefficient(n, p, dim)
        return [] if target is None else [(target, coefficient * c)]

    return T.map_terms(rule)

# ========== Radial 합성 연산자 부분 ==========

# ω∂_r 적용 기능
def apply_omega_dr(T: GeneralizedFunction, dim: DimScalar = M) -> Distribution:
    """
    ∂̄^{2k}δ -> ∂̄^{2k+1}δ
    ∂̄^{2k+1}δ -> (m+2k+1)/(2(k+1)) ∂̄^{2k+2}δ
    """
    require_distribution(T, "apply_omega_dr")

    def rule(n: int, c: DimScalar):
        if n % 2 == 0:
            return [(n + 1, c)]
        k: int = n // 2
        return [(n + 1, (dim + (2 * k + 1)) / (2 * (k + 1)) * c)]

    return T.map_terms(rule)

# ∂_r² 적용 기능
def apply_dr2(T: GeneralizedFunction, dim: DimScalar = M) -> Distribution:
    """
    ∂_r² = -(ω∂_r)², 두 홀짝 모두 ∂̄ⁿδ -> -(m+2k+1)/(2(k+1)) ∂̄ⁿ⁺²δ, k = n // 2
    """
    require_distribution(T, "apply_dr2")
    return T.map_terms(lambda n, c: [(n + 2, -(dim + (2 * (n // 2) + 1)) / (2 * (n // 2 + 1)) * c)])

# (1/r)∂_r 적용 기능
def apply_inv_r_dr(T: GeneralizedFunction, dim: DimScalar = M) -> Distribution:
    """
    ∂̄^{2k}δ -> 1/(2(k+1)) ∂̄^{2k+2}δ, 벡터 항은 정의되지 않음
    """
    require_distribution(T, "apply_inv_r_dr")
    odd = [n for n in T.indices() if n % 2 == 1]
    if odd:
        logger.warning(f"apply_inv_r_dr rejected vector-kind terms {odd}")
        raise UnsupportedAction("(1/r)d_r is not defined on vector-kind terms", input=T.render())
    return T.map_terms(lambda n, c: [(n + 2, c / (n + 2))])

# ========== 나눗셈 부분 ==========

# 1/x 적용 기능
def div_x(T: GeneralizedFunction, dim: DimScalar = M) -> Distribution:
    """
    ∂̄^{2k}δ -> 1/(m+2k) ∂̄^{2k+1}δ
    ∂̄^{2k+1}δ -> 1/(2k+2) ∂̄^{2k+2}δ
    임의 상수 항은 회전 불변 선택으로 0
    """
    require_distribution(T, "div_x")

    def rule(n: int, c: DimScalar):
        if n % 2 == 0:
            return [(n + 1, c / (dim + n))]
        return [(n + 1, c / (n + 1))]

    return T.map_terms(rule)
