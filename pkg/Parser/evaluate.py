"""
┏━━━━━━━━━━━━━━━━━━━━━━━━━━┓
┃ Signumcalc Radial Engine ┃
┗━━━━━━━━━━━━━━━━━━━━━━━━━━┛
Expression Evaluation & Printing
"""

# Libraries
from Algebra import DimScalar, M
from Kernel import (
    GeneralizedFunction, Distribution,
    apply_dirac, apply_laplace, apply_euler, apply_gamma,
    mul_x, mul_x_pow, apply_dr2, apply_inv_r_dr, div_x,
    act_r, act_dr, act_omega, div_r, radial_to_text
)
from Parser.models import Operator, Delta, Pow, Scale, Sum, Neg, OpApply, Expr
from Parser.parse import parse
from Utilities.error_tools import UnsupportedAction
from Utilities.logging_tools import *

logger = get_logger("Parser_Evaluate")

# 한 번 적용하는 연산자 표
SINGLE_ACTIONS = {
    Operator.R: act_r,
    Operator.DR: act_dr,
    Operator.W: act_omega,
    Operator.X: mul_x,
    Operator.D: apply_dirac,
    Operator.L: apply_laplace,
    Operator.E: apply_euler,
    Operator.G: apply_gamma,
    Operator.LB: lambda T, dim: apply_gamma(T, beltrami=True, dim=dim),
    Operator.INV_R: lambda T, dim: div_r(T, 1, dim=dim),
    Operator.INV_X: div_x,
    Operator.INV_R_DR: apply_inv_r_dr,
}

# ========== 연산자 적용 부분 ==========

# 거듭제곱 연산자 적용 기능
def _apply_power(op: Operator, k: int, G: GeneralizedFunction, dim: DimScalar) -> GeneralizedFunction:
    """
    r / dr / w 의 짝수 거듭제곱은 고전 합성 연산자로 먼저 바꿈
    r^{2j} = (-1)^j x^{2j}, dr^{2j} = (∂_r²)^j, w^{2j} = (-1)^j
    홀수 거듭제곱은 짝수 부분 뒤에 한 번 더 공간 전이
    """
    even: int = k - k % 2
    single = SINGLE_ACTIONS[op]

    if op is Operator.W:
        result = G.scale((-1) ** (even // 2))
        return single(result, dim=dim) if k % 2 else result

    if op in (Operator.R, Operator.DR) and isinstance(G, Distribution):
        result: GeneralizedFunction = G
        if even and op is Operator.R:
            result = mul_x_pow(result, even, dim=dim).scale((-1) ** (even // 2))
        elif even:
            for _ in range(even // 2):
                result = apply_dr2(result, dim=dim)
        return single(result, dim=dim) if k % 2 else result

    if op is Operator.X:
        return mul_x_pow(G, k, dim=dim)
    if op is Operator.INV_R:
        return div_r(G, k, dim=dim)

    result = G
    for _ in range(k):
        result = single(result, dim=dim)
    return result

def _apply(op, G: GeneralizedFunction, dim: DimScalar) -> GeneralizedFunction:
    if isinstance(op, Pow):
        return _apply_power(op.op, op.k, G, dim)
    return SINGLE_ACTIONS[op](G, dim=dim)

# ========== 평가 부분 ==========

# 구문 트리를 일반화 함수로 계산하는 기능
def evaluate(e: Expr, dim: DimScalar = M) -> GeneralizedFunction:
    """
    연산자 사슬은 풀어서 안쪽부터 차례로 적용, 공간 전이는 kernel 규칙을 따름
    :param e: Expr 구문 트리
    :param dim: 차원 (기본값은 기호 m)
    :return: Distribution 또는 SignumDistribution
    """
    if isinstance(e, Delta):
        return Distribution.delta()
    if isinstance(e, Scale):
        return evaluate(e.operand, dim).scale(e.factor)
    if isinstance(e, Neg):
        return -evaluate(e.operand, dim)
    if isinstance(e, Sum):
        total: GeneralizedFunction = evaluate(e.terms[0], dim)
        for term in e.terms[1:]:
            total = total + evaluate(term, dim)
        return total

    chain: list[OpApply] = []
    inner: Expr = e
    while isinstance(inner, OpApply):
        chain.append(inner)
        inner = inner.operand

    result: GeneralizedFunction = evaluate(inner, dim)
    for node in reversed(chain):
        try:
            result = _apply(node.op, result, dim)
        except UnsupportedAction as error:
            logger.warning("unsupported sub-expression %r", node.text())
            raise UnsupportedAction(f"{error.message} in '{node.text()}'", input=node.text()) from error
    return result

# 문자열을 바로 계산하는 기능
def normalize(text: str, m0: int | None = None) -> GeneralizedFunction:
    """
    :param text: 식 문자열
    :param m0: 주어지면 m = m0 로 고정한 결과
    """
    result: GeneralizedFunction = evaluate(parse(text))
    return result if m0 is None else result.specialize(m0)

# ========== 출력 부분 ==========

# 정규형 문자열 출력 기능
def print_canonical(g: GeneralizedFunction, dim: DimScalar = M) -> str:
    """
    DIST: "-(m+1)/2 * D^2 delta", SIGN: radial 표기 "w delta", "-(1/m) * dr delta"
    """
    if isinstance(g, Distribution):
        return g.render()
    return radial_to_text(g, dim)
