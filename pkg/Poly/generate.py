"""
┏━━━━━━━━━━━━━━━━━━━━━━━━━━┓
┃ Signumcalc Radial Engine ┃
┗━━━━━━━━━━━━━━━━━━━━━━━━━━┛
Random Test Polynomials
"""

# Libraries
import random

from Poly.models import MultiPoly
from Utilities.error_tools import DomainError

MAX_TERMS: int = 12
COEFFICIENTS: list[int] = [value for value in range(-9, 10) if value]

# seed 로 재현 가능한 임의 다항식 생성 기능
def random_poly(m: int, max_degree: int, seed: int) -> MultiPoly:
    """
    :param m: 변수 개수
    :param max_degree: 최대 총차수 (0 이상)
    :param seed: 난수 seed
    :return: 계수가 [-9, 9] 정수인 MultiPoly
    """
    if max_degree < 0:
        raise DomainError(f"max_degree must be non-negative, got {max_degree}", input=max_degree)

    rng = random.Random(seed)
    terms: dict[tuple[int, ...], int] = {}
    for _ in range(rng.randint(1, MAX_TERMS)):
        exponent = [0] * m
        for _ in range(rng.randint(0, max_degree)):
            exponent[rng.randrange(m)] += 1
        terms[tuple(exponent)] = rng.choice(COEFFICIENTS)
    return MultiPoly(m, terms)
