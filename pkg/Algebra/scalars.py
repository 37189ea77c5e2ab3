"""
┏━━━━━━━━━━━━━━━━━━━━━━━━━━┓
┃ Signumcalc Radial Engine ┃
┗━━━━━━━━━━━━━━━━━━━━━━━━━━┛
Dimension Scalars
"""

# Libraries
from fractions import Fraction
from math import factorial
from typing import Union

from sympy import ZZ
from sympy.polys.fields import field, FracElement
from sympy.polys.rings import PolyElement

from Utilities.error_tools import DivisionByZero, PoleAtDimension, DomainError
from Utilities.logging_tools import *

logger = get_logger("Algebra_Scalars")

# 기호 차원 m 위의 유리함수체 Z(m)
DIM_FIELD, _M = field("m", ZZ)

Number = Union[int, Fraction]

class DimScalar:
    """
    차원 m의 유리함수 (정수 계수 분자 / 분모)
    sympy FracField가 약분과 분모 최고차 계수의 부호를 정규화하므로 구조 비교로 등호 판정 가능
    """
    __slots__ = ("_value",)

    def __init__(self, value: Union["DimScalar", FracElement, Number] = 0):
        if isinstance(value, DimScalar):
            element = value._value
        elif isinstance(value, FracElement):
            element = value
        elif isinstance(value, Fraction):
            element = DIM_FIELD.one * value.numerator / value.denominator
        elif isinstance(value, int):
            element = DIM_FIELD.one * value
        else:
            raise TypeError(f"Cannot build DimScalar from {type(value).__name__}")
        object.__setattr__(self, "_value", element)

    def __setattr__(self, key, value):
        raise AttributeError("DimScalar is immutable")

    # ========== 생성 부분 ==========

    @classmethod
    def m(cls) -> "DimScalar":
        return cls(_M)

    @classmethod
    def constant(cls, value: Number) -> "DimScalar":
        return cls(value)

    # ========== 산술 부분 ==========

    @staticmethod
    def _coerce(other) -> "DimScalar | None":
        if isinstance(other, DimScalar):
            return other
        if isinstance(other, (int, Fraction)):
            return DimScalar(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return DimScalar(self._value + other._value)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return DimScalar(self._value - other._value)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return DimScalar(other._value - self._value)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return DimScalar(self._value * other._value)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise DivisionByZero("Division by the zero dimension scalar", input=self.render())
        return DimScalar(self._value / other._value)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __neg__(self):
        return DimScalar(-self._value)

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return DimScalar(1) / (self ** -exponent)
        return DimScalar(self._value ** exponent)

    # ========== 비교 부분 ==========

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._value == other._value

    def __hash__(self) -> int:
        # 상수는 같은 값의 int / Fraction 과 같은 hash
        if self.is_constant():
            return hash(self.as_fraction())
        return hash(self._value)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_zero(self) -> bool:
        return not self._value.numer

    def is_constant(self) -> bool:
        return self._value.numer.is_ground and self._value.denom.is_ground

    # ========== 구조 부분 ==========

    @property
    def numerator(self) -> PolyElement:
        return self._value.numer

    @property
    def denominator(self) -> PolyElement:
        return self._value.denom

    @staticmethod
    def _dense(poly: PolyElement) -> list[int]:
        degree: int = max((exponent[0] for exponent, _ in poly.terms()), default=0)
        coefficients: list[int] = [0] * (degree + 1)
        for exponent, coefficient in poly.terms():
            coefficients[exponent[0]] = int(coefficient)
        return coefficients

    def numerator_coefficients(self) -> list[int]:
        """
        분자 다항식의 계수 (낮은 차수부터)
        """
        return self._dense(self.numerator)

    def denominator_coefficients(self) -> list[int]:
        return self._dense(self.denominator)

    def degree(self) -> int:
        """
        분자 / 분모 중 큰 쪽의 m 차수, 0 은 0 차
        """
        return max(len(self.numerator_coefficients()), len(self.denominator_coefficients())) - 1

    def height(self) -> int:
        # 계수의 최대 bit 길이
        coefficients: list[int] = self.numerator_coefficients() + self.denominator_coefficients()
        return max(abs(c).bit_length() for c in coefficients)

    # ========== 평가 부분 ==========

    def evaluate(self, m0: int) -> Fraction:
        """
        m = m0 에서의 정확한 값
        :param m0: 구체적인 차원 (1 이상)
        :return: 유리수 Fraction
        """
        if m0 < 1:
            raise DomainError(f"Dimension must be a positive integer, got {m0}", input=m0)

        numerator: int = sum(int(c) * m0 ** e[0] for e, c in self.numerator.terms())
        denominator: int = sum(int(c) * m0 ** e[0] for e, c in self.denominator.terms())

        if denominator == 0:
            logger.warning(f"Pole of {self.render()} at m={m0}")
            raise PoleAtDimension(f"Denominator vanishes at m={m0}", input=self.render())
        return Fraction(numerator, denominator)

    def as_fraction(self) -> Fraction:
        if not self.is_constant():
            raise DomainError("Scalar depends on the dimension m", input=self.render())
        return Fraction(int(self.numerator.LC or 0), int(self.denominator.LC))

    # ========== 출력 부분 ==========

    @staticmethod
    def _format_poly(poly: PolyElement) -> str:
        pieces: list[str] = []
        for exponent, coefficient in sorted(poly.terms(), key=lambda term: -term[0][0]):
            power: int = exponent[0]
            value: int = int(coefficient)
            if power == 0:
                body = str(abs(value))
            else:
                monomial = "m" if power == 1 else f"m^{power}"
                body = monomial if abs(value) == 1 else f"{abs(value)}*{monomial}"
            sign = "-" if value < 0 else "+"
            if not pieces:
                pieces.append(body if sign == "+" else f"-{body}")
            else:
                pieces.append(f"{sign}{body}")
        return "".join(pieces)

    @classmethod
    def _factors(cls, poly: PolyElement) -> tuple[int, list[str]]:
        """
        다항식을 (정수 content, 인수 문자열 목록)으로 분해
        """
        content, factors = poly.factor_list()
        ordered = sorted(factors, key=lambda item: (item[0].degree(), cls._dense(item[0])))
        rendered: list[str] = []
        for factor_poly, multiplicity in ordered:
            text: str = cls._format_poly(factor_poly)
            if text != "m":
                text = f"({text})"
            rendered.append(text if multiplicity == 1 else f"{text}^{multiplicity}")
        return int(content), rendered

    def render(self) -> str:
        """
        인수분해된 형태의 문자열, 예) "(m+1)*(m+3)/8", "-(m+1)/2", "1/(m*(m+1))"
        """
        if self.is_zero():
            return "0"

        numerator_content, numerator_factors = self._factors(self.numerator)
        denominator_content, denominator_factors = self._factors(self.denominator)
        coefficient = Fraction(numerator_content, denominator_content)

        sign: str = "-" if coefficient < 0 else ""
        top_value: int = abs(coefficient.numerator)
        bottom_value: int = coefficient.denominator

        if numerator_factors:
            top = "*".join(([str(top_value)] if top_value != 1 else []) + numerator_factors)
        else:
            top = str(top_value)

        bottom_parts: list[str] = ([str(bottom_value)] if bottom_value != 1 else []) + denominator_factors
        if not bottom_parts:
            return f"{sign}{top}"
        bottom = bottom_parts[0] if len(bottom_parts) == 1 else f"({'*'.join(bottom_parts)})"
        return f"{sign}{top}/{bottom}"

    def render_coefficient(self) -> str:
        """
        항의 계수로 쓸 때의 문자열, 분자가 상수이고 분모에 m이 있으면 괄호로 묶음 ("-(1/m)")
        """
        text: str = self.render()
        _, numerator_factors = self._factors(self.numerator)
        _, denominator_factors = self._factors(self.denominator)
        if not numerator_factors and denominator_factors:
            return f"-({text[1:]})" if text.startswith("-") else f"({text})"
        return text

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"DimScalar('{self.render()}')"

# ========== 기능 부분 ==========

M: DimScalar = DimScalar.m()
ZERO: DimScalar = DimScalar(0)
ONE: DimScalar = DimScalar(1)

# 사칙연산을 이름으로 수행하는 기능
def dimscalar_arith(a: DimScalar, b: DimScalar, op: str) -> DimScalar:
    """
    두 DimScalar의 사칙연산
    :param a: 왼쪽 피연산자
    :param b: 오른쪽 피연산자
    :param op: "add", "sub", "mul", "div" 중 하나
    :return: 정규화된 결과 DimScalar
    """
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise DomainError(f"Unknown arithmetic operation: {op}", input=op)

# 구체적인 차원에서 값을 계산하는 기능
def dim_eval(f: DimScalar, m0: int) -> Fraction:
    return f.evaluate(m0)

# (start)(start+step)...(start+(count-1)*step) 곱을 만드는 기능
def rising_product(start: DimScalar | int, step: int, count: int) -> DimScalar:
    """
    등차 상승곱
    :param start: 첫 번째 인수
    :param step: 인수 사이의 간격
    :param count: 인수의 개수 (0이면 빈 곱 = 1)
    :return: DimScalar
    """
    if count < 0:
        raise DomainError(f"Negative factor count: {count}", input=count)
    result: DimScalar = ONE
    base: DimScalar = DimScalar(start)
    for index in range(count):
        result = result * (base + index * step)
    return result

# A_k = (m+1)(m+3)...(m+2k-1) / (2^k k!)
def odd_rising_coeff(k: int, dim: DimScalar = M) -> DimScalar:
    """
    radial 미분 기저와 Dirac 거듭제곱 기저 사이의 변환 상수 A_k
    :param k: 0 이상의 정수
    :param dim: 차원 (기본값은 기호 m, 구체적인 값으로 고정 가능)
    :return: A_k DimScalar
    """
    if k < 0:
        raise DomainError(f"odd_rising_coeff needs k >= 0, got {k}", input=k)
    return rising_product(dim + 1, 2, k) / (2 ** k * factorial(k))
