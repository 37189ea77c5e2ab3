"""
┏━━━━━━━━━━━━━━━━━━━━━━━━━━┓
┃ Signumcalc Radial Engine ┃
┗━━━━━━━━━━━━━━━━━━━━━━━━━━┛
Error Tools
"""

# Libraries
from typing import Any

# ========== 기본 Error ==========

class CalcError(Exception):
    """
    계산 엔진에서 발생하는 모든 오류의 기본형
    detail은 {"type", "message", "input"} 형태로 CLI에서 그대로 출력됨
    """
    error_type: str = "calc error"
    exit_code: int = 2

    def __init__(self, message: str, input: Any = None):
        super().__init__(message)
        self.message = message
        self.input = input

    @property
    def detail(self) -> dict:
        detail: dict = {
            "type": self.error_type,
            "message": self.message
        }
        if self.input is not None:
            detail["input"] = str(self.input)
        return detail

# ========== 산술 부분 ==========

class DivisionByZero(CalcError):
    error_type = "division by zero"

class PoleAtDimension(CalcError):
    error_type = "pole at dimension"

class DomainError(CalcError):
    error_type = "domain error"

# ========== Kernel 부분 ==========

class UnsupportedAction(CalcError):
    error_type = "unsupported action"
    exit_code = 3

class SpaceMismatch(CalcError):
    error_type = "space mismatch"
    exit_code = 3

class KindMismatch(CalcError):
    """
    scalar 값과 vector 값을 더할 수 없는 경우
    value에는 scalar / vector 부분이 분리된 PairingValue가 담김
    """
    error_type = "kind mismatch"
    exit_code = 3

    def __init__(self, message: str, value: Any = None, input: Any = None):
        super().__init__(message, input)
        self.value = value

    @property
    def detail(self) -> dict:
        detail: dict = super().detail
        if self.value is not None:
            detail["value"] = str(self.value)
        return detail

# ========== Parser 부분 ==========

class ParseError(CalcError):
    error_type = "parse error"

    def __init__(self, message: str, offset: int, expected: set[str] | None = None, input: Any = None):
        super().__init__(message, input)
        self.offset = offset
        self.expected = frozenset(expected or ())

    def __str__(self) -> str:
        if self.expected:
            return f"{self.message} at offset {self.offset} (expected {', '.join(sorted(self.expected))})"
        return f"{self.message} at offset {self.offset}"

    @property
    def detail(self) -> dict:
        detail: dict = super().detail
        detail["offset"] = self.offset
        detail["expected"] = sorted(self.expected)
        return detail

class ArityError(ParseError):
    """
    한 항에 delta 가 없거나 두 개 이상인 경우 (offset 은 항의 시작 위치)
    """
    error_type = "arity error"

# ========== Oracle / CLI 부분 ==========

class UnknownSuite(CalcError):
    error_type = "unknown suite"

class UsageError(CalcError):
    error_type = "usage error"
