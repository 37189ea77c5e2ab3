"""
┏━━━━━━━━━━━━━━━━━━━━━━━━━━┓
┃ Signumcalc Radial Engine ┃
┗━━━━━━━━━━━━━━━━━━━━━━━━━━┛
Polynomial Data Models
"""

# Libraries
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

from Utilities.error_tools import DomainError

Rational = Union[int, Fraction]
Exponent = tuple[int, ...]

# 유리수 출력 ("3", "-1/2")
def format_rational(value: Fraction) -> str:
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"

class MultiPoly:
    """
    m 변수 유리수 계수 다항식
    terms: 지수 다중지표 α -> Fraction 계수 (0 계수는 저장하지 않음)
    """
    __slots__ = ("m", "_terms")

    def __init__(self, m: int, terms: Mapping[Exponent, Rational] | None = None):
        if m < 1:
            raise DomainError(f"Polynomial dimension must be positive, got {m}", input=m)
        cleaned: dict[Exponent, Fraction] = {}
        for exponent, coefficient in (terms or {}).items():
            exponent = tuple(exponent)
            if len(exponent) != m or any(e < 0 for e in exponent):
                raise DomainError(f"Exponent {exponent} does not fit dimension {m}", input=exponent)
            value = Fraction(coefficient)
            if value:
                cleaned[exponent] = cleaned.get(exponent, Fraction(0)) + value
                if not cleaned[exponent]:
                    del cleaned[exponent]
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "_terms", cleaned)

    def __setattr__(self, key, value):
        raise AttributeError("MultiPoly is immutable")

    # ========== 생성 부분 ==========

    @classmethod
    def constant(cls, m: int, value: Rational) -> "MultiPoly":
        return cls(m, {(0,) * m: value})

    @classmethod
    def variable(cls, m: int, index: int, power: int = 1) -> "MultiPoly":
        """
        x_{index+1}^power (index 는 0부터)
        """
        if not 0 <= index < m:
            raise DomainError(f"Variable x{index + 1} does not exist in dimension {m}", input=index + 1)
        exponent = [0] * m
        exponent[index] = power
        return cls(m, {tuple(exponent): 1})

    # ========== 조회 부분 ==========

    @property
    def terms(self) -> dict[Exponent, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        return max((sum(exponent) for exponent in self._terms), default=0)

    def coefficient(self, exponent: Exponent) -> Fraction:
        return self._terms.get(tuple(exponent), Fraction(0))

    def value_at_zero(self) -> Fraction:
        return self.coefficient((0,) * self.m)

    def evaluate(self, point: Iterable[Rational]) -> Fraction:
        point = [Fraction(value) for value in point]
        if len(point) != self.m:
            raise DomainError(f"Point needs {self.m} coordinates", input=point)
        total = Fraction(0)
        for exponent, coefficient in self._terms.items():
            term = coefficient
            for value, power in zip(point, exponent):
                term *= value ** power
            total += term
        return total

    # ========== 연산 부분 ==========

    def _check_dimension(self, other: "MultiPoly") -> None:
        if self.m != other.m:
            raise DomainError(f"Dimension mismatch: {self.m} and {other.m}", input=(self.m, other.m))

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check_dimension(other)
        merged: dict[Exponent, Fraction] = dict(self._terms)
        for exponent, coefficient in other._terms.items():
            merged[exponent] = merged.get(exponent, Fraction(0)) + coefficient
        return MultiPoly(self.m, merged)

    def __neg__(self) -> "MultiPoly":
        return self.scale(-1)

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self + (-other)

    def scale(self, factor: Rational) -> "MultiPoly":
        factor = Fraction(factor)
        return MultiPoly(self.m, {e: c * factor for e, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check_dimension(other)
        product: dict[Exponent, Fraction] = {}
        for left_exponent, left in self._terms.items():
            for right_exponent, right in other._terms.items():
                exponent = tuple(a + b for a, b in zip(left_exponent, right_exponent))
                product[exponent] = product.get(exponent, Fraction(0)) + left * right
        return MultiPoly(self.m, product)

    __rmul__ = __mul__

    def derivative(self, index: int) -> "MultiPoly":
        """
        ∂/∂x_{index+1} (index 는 0부터)
        """
        if not 0 <= index < self.m:
            raise DomainError(f"Variable x{index + 1} does not exist in dimension {self.m}", input=index + 1)
        result: dict[Exponent, Fraction] = {}
        for exponent, coefficient in self._terms.items():
            power: int = exponent[index]
            if power == 0:
                continue
            lowered = list(exponent)
            lowered[index] -= 1
            result[tuple(lowered)] = result.get(tuple(lowered), Fraction(0)) + coefficient * power
        return MultiPoly(self.m, result)

    # ========== 비교 / 출력 부분 ==========

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.m == other.m and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.m, frozenset(self._terms.items())))

    def sorted_terms(self) -> list[tuple[Exponent, Fraction]]:
        # 차수 내림차순, 같은 차수는 지수 사전순 내림차순
        return sorted(self._terms.items(), key=lambda item: (-sum(item[0]), tuple(-e for e in item[0])))

    def render(self) -> str:
        """
        "3*x1^2*x2 - 1/2*x3" 형태의 문자열
        """
        if self.is_zero():
            return "0"
        pieces: list[str] = []
        for exponent, coefficient in self.sorted_terms():
            factors: list[str] = [
                f"x{index + 1}" if power == 1 else f"x{index + 1}^{power}"
                for index, power in enumerate(exponent) if power
            ]
            magnitude: Fraction = abs(coefficient)
            if not factors:
                body = format_rational(magnitude)
            elif magnitude == 1:
                body = "*".join(factors)
            else:
                body = "*".join([format_rational(magnitude)] + factors)
            if not pieces:
                pieces.append(f"-{body}" if coefficient < 0 else body)
            else:
                pieces.append(f" - {body}" if coefficient < 0 else f" + {body}")
        return "".join(pieces)

    def to_json(self) -> list:
        """
        [[α...], "p/q"] 목록
        """
        return [[list(exponent), format_rational(coefficient)] for exponent, coefficient in self.sorted_terms()]

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"MultiPoly({self.m}, '{self.render()}')"

@dataclass(frozen=True)
class VectorPoly:
    """
    m 개의 MultiPoly 성분
    """
    components: tuple[MultiPoly, ...]

    def __post_init__(self):
        dimensions = {component.m for component in self.components}
        if len(dimensions) > 1 or (dimensions and dimensions.pop() != len(self.components)):
            raise DomainError("Vector components must share the dimension m", input=len(self.components))

    @property
    def m(self) -> int:
        return len(self.components)

    def __getitem__(self, index: int) -> MultiPoly:
        return self.components[index]

    def value_at_zero(self) -> tuple[Fraction, ...]:
        return tuple(component.value_at_zero() for component in self.components)

@dataclass(frozen=True)
class RadialPoly:
    """
    r 의 다항식, scalar 이면 r^j -> Fraction, vector 이면 r^j -> m 성분 Fraction
    """
    m: int
    coefficients: tuple[tuple[int, Union[Fraction, tuple[Fraction, ...]]], ...] = ()
    vector: bool = False

    @classmethod
    def build(cls, m: int, coefficients: Mapping[int, object], vector: bool = False) -> "RadialPoly":
        cleaned = []
        for power in sorted(coefficients):
            value = coefficients[power]
            if vector:
                value = tuple(Fraction(component) for component in value)
                if any(value):
                    cleaned.append((power, value))
            else:
                value = Fraction(value)
                if value:
                    cleaned.append((power, value))
        return cls(m, tuple(cleaned), vector)

    def as_dict(self) -> dict[int, object]:
        return dict(self.coefficients)

    def powers(self) -> list[int]:
        return [power for power, _ in self.coefficients]

    def coefficient(self, power: int):
        default = tuple(Fraction(0) for _ in range(self.m)) if self.vector else Fraction(0)
        return self.as_dict().get(power, default)

    def is_zero(self) -> bool:
        return not self.coefficients

    def is_even(self) -> bool:
        return all(power % 2 == 0 for power in self.powers())

    def is_odd(self) -> bool:
        return all(power % 2 == 1 for power in self.powers())

    def render(self) -> str:
        if self.is_zero():
            return "0"
        pieces: list[str] = []
        for power, value in self.coefficients:
            monomial = "" if power == 0 else ("r" if power == 1 else f"r^{power}")
            if self.vector:
                text = "(" + ", ".join(format_rational(component) for component in value) + ")"
            else:
                text = format_rational(value)
            pieces.append(f"{text}*{monomial}" if monomial else text)
        return " + ".join(pieces)

# ========== Pairing 값 ==========

@dataclass(frozen=True)
class PairingValue:
    """
    pairing 결과: scalar 부분과 vector 부분을 따로 보관
    두 부분이 모두 0 이 아니면 kind 가 섞인 값
    """
    scalar: Fraction | None = None
    vector: tuple[Fraction, ...] | None = None

    @classmethod
    def of_scalar(cls, value: Rational) -> "PairingValue":
        return cls(scalar=Fraction(value))

    @classmethod
    def of_vector(cls, values: Iterable[Rational]) -> "PairingValue":
        return cls(vector=tuple(Fraction(value) for value in values))

    @classmethod
    def zero(cls) -> "PairingValue":
        return cls()

    def scalar_part(self) -> Fraction:
        return self.scalar if self.scalar is not None else Fraction(0)

    def vector_part(self, m: int | None = None) -> tuple[Fraction, ...]:
        if self.vector is not None:
            return self.vector
        return tuple(Fraction(0) for _ in range(m or 0))

    def has_scalar(self) -> bool:
        return self.scalar is not None and self.scalar != 0

    def has_vector(self) -> bool:
        return self.vector is not None and any(self.vector)

    def is_zero(self) -> bool:
        return not self.has_scalar() and not self.has_vector()

    def is_mixed(self) -> bool:
        return self.has_scalar() and self.has_vector()

    # ========== 연산 부분 ==========

    def __add__(self, other: "PairingValue") -> "PairingValue":
        if not isinstance(other, PairingValue):
            return NotImplemented
        if self.scalar is None and other.scalar is None:
            scalar = None
        else:
            scalar = self.scalar_part() + other.scalar_part()
        if self.vector is None:
            vector = other.vector
        elif other.vector is None:
            vector = self.vector
        else:
            if len(self.vector) != len(other.vector):
                raise DomainError("Vector pairing values of different dimension", input=(self, other))
            vector = tuple(a + b for a, b in zip(self.vector, other.vector))
        return PairingValue(scalar, vector)

    def scale(self, factor: Rational) -> "PairingValue":
        factor = Fraction(factor)
        return PairingValue(
            None if self.scalar is None else self.scalar * factor,
            None if self.vector is None else tuple(value * factor for value in self.vector)
        )

    def __neg__(self) -> "PairingValue":
        return self.scale(-1)

    def __sub__(self, other: "PairingValue") -> "PairingValue":
        return self + (-other)

    # ========== 비교 / 출력 부분 ==========

    def __eq__(self, other) -> bool:
        if not isinstance(other, PairingValue):
            return NotImplemented
        if self.scalar_part() != other.scalar_part():
            return False
        left, right = self.vector, other.vector
        if left is None or right is None:
            return not any(left or ()) and not any(right or ())
        return left == right

    def __hash__(self) -> int:
        return hash((self.scalar_part(), tuple(self.vector or ()) if self.has_vector() else ()))

    def render(self) -> str:
        """
        scalar 는 "2", vector 는 "(-1, 0, 0)", 섞인 값은 "2 + (-1, 0, 0)"
        """
        vector_text = "(" + ", ".join(format_rational(v) for v in self.vector) + ")" if self.vector is not None else ""
        if self.is_mixed():
            return f"{format_rational(self.scalar)} + {vector_text}"
        if self.has_vector():
            return vector_text
        if self.scalar is None and self.vector is not None:
            return vector_text
        return format_rational(self.scalar_part())

    def to_json(self) -> dict:
        result: dict = {}
        if self.scalar is not None:
            result["scalar"] = format_rational(self.scalar)
        if self.vector is not None:
            result["vector"] = [format_rational(value) for value in self.vector]
        return result

    def __str__(self) -> str:
        return self.render()
