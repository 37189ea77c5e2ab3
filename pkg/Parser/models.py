"""
┏━━━━━━━━━━━━━━━━━━━━━━━━━━┓
┃ Signumcalc Radial Engine ┃
┗━━━━━━━━━━━━━━━━━━━━━━━━━━┛
Expression Syntax Tree
"""

# Libraries
from dataclasses import dataclass
from enum import Enum as BaseEnum
from typing import Union

from Algebra import DimScalar

# Enum
class Operator(BaseEnum):
    R = "r"
    DR = "dr"
    W = "w"
    X = "x"
    D = "D"  # Dirac
    L = "L"  # Laplace
    E = "E"  # Euler
    G = "G"  # Gamma
    LB = "LB"  # Laplace-Beltrami
    INV_R = "inv_r"
    INV_X = "inv_x"
    INV_R_DR = "inv_r_dr"

    @property
    def powerable(self) -> bool:
        return self in POWERABLE

POWERABLE: frozenset[Operator] = frozenset({
    Operator.R, Operator.DR, Operator.W, Operator.X,
    Operator.D, Operator.L, Operator.INV_R, Operator.INV_R_DR
})

OPERATOR_NAMES: dict[str, Operator] = {operator.value: operator for operator in Operator}

# ========== 노드 부분 ==========

@dataclass(frozen=True)
class Delta:
    def text(self) -> str:
        return "delta"

@dataclass(frozen=True)
class Pow:
    op: Operator
    k: int

    def text(self) -> str:
        return f"{self.op.value}^{self.k}"

@dataclass(frozen=True)
class OpApply:
    op: Union[Operator, Pow]
    operand: "Expr"

    def text(self) -> str:
        names: list[str] = []
        inner: "Expr" = self
        while isinstance(inner, OpApply):
            names.append(inner.op.text() if isinstance(inner.op, Pow) else inner.op.value)
            inner = inner.operand
        rendered: str = inner.text()
        if isinstance(inner, (Sum, Neg, Scale)):
            rendered = f"({rendered})"
        return " ".join(names + [rendered])

@dataclass(frozen=True)
class Scale:
    factor: DimScalar
    operand: "Expr"

    def text(self) -> str:
        inner: str = self.operand.text()
        if isinstance(self.operand, (Sum, Neg)):
            inner = f"({inner})"
        factor: str = self.factor.render()
        if factor.startswith("-") or "/" in factor or "+" in factor:
            factor = f"({factor})"
        return f"{factor} * {inner}"

@dataclass(frozen=True)
class Sum:
    terms: tuple["Expr", ...]

    def text(self) -> str:
        return " + ".join(f"({term.text()})" if isinstance(term, Sum) else term.text() for term in self.terms)

@dataclass(frozen=True)
class Neg:
    operand: "Expr"

    def text(self) -> str:
        inner: str = self.operand.text()
        return f"-({inner})" if isinstance(self.operand, (Sum, Neg)) else f"-{inner}"

Expr = Union[Delta, OpApply, Scale, Sum, Neg]
