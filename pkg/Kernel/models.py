"""
┏━━━━━━━━━━━━━━━━━━━━━━━━━━┓
┃ Signumcalc Radial Engine ┃
┗━━━━━━━━━━━━━━━━━━━━━━━━━━┛
Kernel Data Models
"""

# Libraries
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Union

from enum import Enum as BaseEnum

from Algebra import DimScalar, ZERO, ONE
from Utilities.error_tools import DomainError, SpaceMismatch

Coefficient = Union[DimScalar, int, Fraction]

# Enum
class Space(BaseEnum):
    DIST = "dist"
    SIGN = "sign"

    def toggled(self) -> "Space":
        return Space.SIGN if self is Space.DIST else Space.DIST

class Kind(BaseEnum):
    SCALAR = "scalar"
    VECTOR = "vector"

class RadialLabel(BaseEnum):
    D = "d"  # ∂_r^{2k} δ
    V = "v"  # (ω ∂_r^{2k+1}) δ
    SD = "sd"  # ∂_r^{2k+1} δ (signum)
    SV = "sv"  # (ω ∂_r^{2k}) δ (signum)

    @property
    def space(self) -> Space:
        return Space.DIST if self in (RadialLabel.D, RadialLabel.V) else Space.SIGN

    @property
    def parity(self) -> int:
        # 허용되는 미분 차수의 홀짝
        return 0 if self in (RadialLabel.D, RadialLabel.SV) else 1

# (계수, 기저 문자열) 목록을 "c * 기저 + ..." 형태로 잇는 기능
def render_terms(pairs: list[tuple[DimScalar, str]]) -> str:
    if not pairs:
        return "0"
    pieces: list[str] = []
    for coefficient, basis in pairs:
        negative: bool = coefficient.render().startswith("-")
        magnitude: DimScalar = -coefficient if negative else coefficient
        body: str = basis if magnitude == ONE else f"{magnitude.render_coefficient()} * {basis}"
        if not pieces:
            pieces.append(f"-{body}" if negative else body)
        else:
            pieces.append(f" - {body}" if negative else f" + {body}")
    return "".join(pieces)

# ========== 일반화 함수 ==========

class GeneralizedFunction:
    """
    원점에 지지된 (signum)distribution 의 기저 전개
    terms: 기저 번호 n -> 계수 DimScalar (0 계수는 저장하지 않음)
    """
    space: Space = Space.DIST
    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, Coefficient] | None = None):
        cleaned: dict[int, DimScalar] = {}
        for index, coefficient in (terms or {}).items():
            if not isinstance(index, int) or index < 0:
                raise DomainError(f"Basis index must be a non-negative integer, got {index}", input=index)
            value = DimScalar(coefficient)
            if not value.is_zero():
                cleaned[index] = value
        object.__setattr__(self, "_terms", dict(sorted(cleaned.items())))

    def __setattr__(self, key, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    # ========== 생성 부분 ==========

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def basis(cls, n: int, coefficient: Coefficient = 1):
        return cls({n: coefficient})

    @classmethod
    def for_space(cls, space: Space) -> type["GeneralizedFunction"]:
        return Distribution if space is Space.DIST else SignumDistribution

    @classmethod
    def collect(cls, pairs: Iterable[tuple[int, DimScalar]]):
        """
        (n, 계수) 쌍을 더해서 하나의 객체로 모으는 기능
        """
        accumulated: dict[int, DimScalar] = {}
        for index, coefficient in pairs:
            accumulated[index] = accumulated.get(index, ZERO) + coefficient
        return cls(accumulated)

    # ========== 조회 부분 ==========

    @property
    def terms(self) -> dict[int, DimScalar]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def indices(self) -> list[int]:
        return list(self._terms)

    def coefficient(self, n: int) -> DimScalar:
        return self._terms.get(n, ZERO)

    def is_zero(self) -> bool:
        return not self._terms

    def kind(self, n: int) -> Kind:
        raise NotImplementedError

    def kinds(self) -> set[Kind]:
        return {self.kind(n) for n in self._terms}

    def degree_offsets(self) -> dict[int, int]:
        """
        각 항의 동차 차수 -m-n 에서 n 부분 (ω 는 차수 0)
        """
        return {n: n for n in self._terms}

    # ========== 선형 연산 부분 ==========

    def _check_space(self, other: "GeneralizedFunction") -> None:
        if type(self) is not type(other):
            raise SpaceMismatch(
                f"Cannot combine {self.space.value} and {other.space.value} elements",
                input=f"{self.render()} | {other.render()}"
            )

    def map_terms(self, rule: Callable[[int, DimScalar], Iterable[tuple[int, DimScalar]]],
                  target: type["GeneralizedFunction"] | None = None):
        """
        각 항에 rule을 적용하고 target 공간으로 모으는 기능
        :param rule: (n, 계수) -> [(n', 계수')] 규칙
        :param target: 결과 클래스 (기본값은 같은 공간)
        """
        result_class = target or type(self)
        return result_class.collect(
            pair for index, coefficient in self._terms.items() for pair in rule(index, coefficient)
        )

    def __add__(self, other):
        if not isinstance(other, GeneralizedFunction):
            return NotImplemented
        self._check_space(other)
        return type(self).collect(list(self._terms.items()) + list(other._terms.items()))

    def __sub__(self, other):
        if not isinstance(other, GeneralizedFunction):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, factor: Coefficient):
        factor = DimScalar(factor)
        return type(self)({n: c * factor for n, c in self._terms.items()})

    def __mul__(self, factor):
        if not isinstance(factor, (DimScalar, int, Fraction)):
            return NotImplemented
        return self.scale(factor)

    __rmul__ = __mul__

    def specialize(self, m0: int):
        """
        모든 계수를 m = m0 에서 평가한 상수 계수 객체
        """
        return type(self)({n: DimScalar(c.evaluate(m0)) for n, c in self._terms.items()})

    # ========== 비교 / 출력 부분 ==========

    def __eq__(self, other) -> bool:
        if not isinstance(other, GeneralizedFunction):
            return NotImplemented
        return type(self) is type(other) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.space, tuple(self._terms.items())))

    def basis_text(self, n: int) -> str:
        raise NotImplementedError

    def render(self) -> str:
        """
        "c(m) * 기저" 항을 기저 번호 오름차순으로 이어 붙인 문자열
        """
        return render_terms([(coefficient, self.basis_text(n)) for n, coefficient in self._terms.items()])

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"{type(self).__name__}('{self.render()}')"

class Distribution(GeneralizedFunction):
    """
    Dirac 거듭제곱 기저 ∂̄ⁿδ 의 유한 선형결합
    """
    space = Space.DIST
    __slots__ = ()

    @classmethod
    def delta(cls) -> "Distribution":
        return cls({0: 1})

    def kind(self, n: int) -> Kind:
        return Kind.SCALAR if n % 2 == 0 else Kind.VECTOR

    def basis_text(self, n: int) -> str:
        if n == 0:
            return "delta"
        return "D delta" if n == 1 else f"D^{n} delta"

class SignumDistribution(GeneralizedFunction):
    """
    ω-associate 기저 sₙ 의 유한 선형결합, ⟨sₙ, ωφ⟩ = -⟨∂̄ⁿδ, φ⟩
    """
    space = Space.SIGN
    __slots__ = ()

    def kind(self, n: int) -> Kind:
        return Kind.VECTOR if n % 2 == 0 else Kind.SCALAR

    def basis_text(self, n: int) -> str:
        return f"s[{n}]"

# ========== Radial 표현 ==========

@dataclass(frozen=True)
class RadialTerm:
    label: RadialLabel
    order: int  # radial 미분 차수 (d₂ 이면 2)
    coefficient: DimScalar

    def __post_init__(self):
        if self.order < 0 or self.order % 2 != self.label.parity:
            raise DomainError(
                f"Radial label {self.label.value} cannot carry order {self.order}",
                input=f"{self.label.value}_{self.order}"
            )

@dataclass(frozen=True)
class RadialForm:
    """
    d / v / sd / sv 라벨로 적은 radial 기저 전개
    """
    space: Space
    terms: tuple[RadialTerm, ...] = ()

    def __post_init__(self):
        for term in self.terms:
            if term.label.space is not self.space:
                raise SpaceMismatch(
                    f"Radial label {term.label.value} does not live in {self.space.value} space",
                    input=term.label.value
                )

    @classmethod
    def single(cls, label: RadialLabel, order: int, coefficient: Coefficient = 1) -> "RadialForm":
        return cls(label.space, (RadialTerm(label, order, DimScalar(coefficient)),))

# 같은 공간, 같은 계수표인지 확인하는 기능
def is_equal(a: GeneralizedFunction, b: GeneralizedFunction) -> bool:
    """
    공간이 다르면 예외 없이 False, 계수는 기호 m 에서 정확히 비교
    """
    return a.space is b.space and a == b
