"""
┏━━━━━━━━━━━━━━━━━━━━━━━━━━┓
┃ Signumcalc Radial Engine ┃
┗━━━━━━━━━━━━━━━━━━━━━━━━━━┛
Expression Parser
"""

# Libraries
from dataclasses import dataclass, field

from Algebra import DimScalar, M, ONE
from Parser.models import Operator, OPERATOR_NAMES, Delta, Pow, OpApply, Scale, Sum, Neg, Expr
from Parser.tokens import Token, TokenKind, TokenStream
from Utilities.error_tools import ParseError, ArityError, DivisionByZero
from Utilities.logging_tools import *

logger = get_logger("Parser_Parse")

MAX_DEPTH: int = 64
MAX_EXPONENT: int = 64
MAX_ORDER: int = 256  # 입력 전체에서 연산자 적용 횟수의 합
MAX_SCALAR_DEGREE: int = 64
MAX_SCALAR_BITS: int = 4096
FACTOR_START: set[str] = {"number", "m", "delta", "operator", "("}
SCALAR_SYMBOLS: str = "+-*/^()"

@dataclass
class TermResult:
    """
    한 항을 읽는 중의 상태: 계수, 연산자 사슬, 피연산자
    """
    offset: int
    coefficient: DimScalar = ONE
    ops: list = field(default_factory=list)
    operand: Expr | None = None

class ExpressionParser:
    """
    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor (['*'] factor | '/' scalar)*
    factor := scalar | opname ['^' nat] | '(' expr ')' | 'delta'
    scalar := number | 'm' | '(' 스칼라 식 ')' , 뒤에 ['^' nat]
    연산자는 오른쪽의 delta 에 오른쪽부터 적용됨
    """

    def __init__(self, source: str):
        self.stream = TokenStream(source)
        self.depth = 0
        self.order = 0

    def parse(self) -> Expr:
        result = self._expression(allow_chain=False)
        if not self.stream.at_end():
            raise self.stream.fail("Unexpected token", {"+", "-", "end of input"})
        return result

    # ========== 식 / 항 부분 ==========

    def _expression(self, allow_chain: bool):
        parts: list[tuple[bool, TermResult]] = []
        negative: bool = False
        if self.stream.peek().is_symbol("-") or self.stream.peek().is_symbol("+"):
            negative = self.stream.advance().text == "-"
        parts.append((negative, self._term()))

        while self.stream.peek().is_symbol("+") or self.stream.peek().is_symbol("-"):
            negative = self.stream.advance().text == "-"
            parts.append((negative, self._term()))

        # 괄호 안의 연산자 묶음, 예) "(w dr)"
        if allow_chain and len(parts) == 1 and not parts[0][0]:
            only: TermResult = parts[0][1]
            if only.operand is None and only.ops:
                return only

        expressions: list[Expr] = [self._close_term(negative, term) for negative, term in parts]
        return expressions[0] if len(expressions) == 1 else Sum(tuple(expressions))

    def _close_term(self, negative: bool, term: TermResult) -> Expr:
        operand: Expr | None = term.operand
        if operand is None:
            if term.ops or not term.coefficient.is_zero():
                raise ArityError("Missing 'delta' in term", term.offset, {"delta"}, input=self.stream.source)
            operand = Delta()

        node: Expr = operand
        for op in reversed(term.ops):
            node = OpApply(op, node)
        if term.coefficient != ONE:
            node = Scale(term.coefficient, node)
        return Neg(node) if negative else node

    def _starts_factor(self, token: Token) -> bool:
        return token.kind in (TokenKind.NUMBER, TokenKind.NAME) or token.is_symbol("(")

    def _term(self) -> TermResult:
        term = TermResult(offset=self.stream.peek().offset)
        read_any: bool = False
        last_scalar: bool = False

        while True:
            token = self.stream.peek()
            if read_any and token.is_symbol("*"):
                self.stream.advance()
                token = self.stream.peek()
            elif read_any and not (self._starts_factor(token) or token.is_symbol("/")):
                break

            if token.is_symbol("/"):
                if not last_scalar:
                    raise self.stream.fail("Division needs a scalar on its left", FACTOR_START)
                self.stream.advance()
                divisor_token = self.stream.peek()
                term.coefficient = self._divide(term.coefficient, self._scalar_atom(), divisor_token)
                continue

            if not self._starts_factor(token):
                raise self.stream.fail("Expected a factor", FACTOR_START)

            last_scalar = False
            if token.kind is TokenKind.NUMBER or (token.kind is TokenKind.NAME and token.text == "m"):
                term.coefficient = self._multiply(term.coefficient, self._scalar_atom(), token)
                last_scalar = True
            elif token.kind is TokenKind.NAME and token.text == "delta":
                self.stream.advance()
                self._set_operand(term, Delta(), token)
            elif token.kind is TokenKind.NAME:
                self._operator(term, token)
            elif self._scalar_group_ahead():
                term.coefficient = self._multiply(term.coefficient, self._scalar_atom(), token)
                last_scalar = True
            else:
                self._group(term, token)
            read_any = True

        return term

    def _set_operand(self, term: TermResult, operand: Expr, token: Token) -> None:
        if term.operand is not None:
            raise ArityError("Duplicated 'delta' in term", token.offset, {"+", "-"}, input=self.stream.source)
        term.operand = operand

    def _operator(self, term: TermResult, token: Token) -> None:
        operator: Operator | None = OPERATOR_NAMES.get(token.text)
        if operator is None:
            raise self.stream.fail("Unknown name", FACTOR_START)
        if term.operand is not None:
            raise self.stream.fail("Operator written after its operand", {"+", "-", "end of input"})
        self.stream.advance()

        if self.stream.peek().is_symbol("^"):
            caret = self.stream.peek()
            if not operator.powerable:
                raise self.stream.fail(f"Operator {operator.value} takes no power", FACTOR_START, caret)
            self.stream.advance()
            exponent = self._exponent()
            self._count_order(exponent, token)
            term.ops.append(Pow(operator, exponent))
            return
        self._count_order(1, token)
        term.ops.append(operator)

    def _count_order(self, count: int, token: Token) -> None:
        self.order += count
        if self.order > MAX_ORDER:
            raise ParseError(f"More than {MAX_ORDER} operator applications", token.offset, input=self.stream.source)

    def _group(self, term: TermResult, token: Token) -> None:
        self.stream.advance()
        self._enter(token)
        inner = self._expression(allow_chain=True)
        self.stream.expect_symbol(")")
        self.depth -= 1

        if isinstance(inner, TermResult):
            if term.operand is not None:
                raise self.stream.fail("Operator written after its operand", {"+", "-", "end of input"}, token)
            term.ops.extend(inner.ops)
            term.coefficient = self._multiply(term.coefficient, inner.coefficient, token)
            return
        self._set_operand(term, inner, token)

    def _enter(self, token: Token) -> None:
        self.depth += 1
        if self.depth > MAX_DEPTH:
            raise ParseError(f"Nesting deeper than {MAX_DEPTH}", token.offset, input=self.stream.source)

    def _exponent(self) -> int:
        token = self.stream.expect_number()
        value: int = int(token.text)
        if not 1 <= value <= MAX_EXPONENT:
            raise ParseError(f"Power must lie in 1..{MAX_EXPONENT}", token.offset, {"number"}, input=self.stream.source)
        return value

    # ========== 스칼라 부분 ==========

    def _scalar_group_ahead(self) -> bool:
        # '(' 부터 짝이 맞는 ')' 까지 숫자, m, 산술 기호만 있으면 스칼라 묶음
        depth: int = 0
        ahead: int = 0
        while True:
            token = self.stream.peek(ahead)
            if token.kind is TokenKind.END:
                return False
            if token.kind is TokenKind.NAME and token.text != "m":
                return False
            if token.kind is TokenKind.SYMBOL and token.text not in SCALAR_SYMBOLS:
                return False
            if token.is_symbol("("):
                depth += 1
            elif token.is_symbol(")"):
                depth -= 1
                if depth == 0:
                    return ahead > 1
            ahead += 1

    # 스칼라 크기 제한 확인 기능
    def _bounded(self, degree: int, bits: int, token: Token) -> None:
        if degree > MAX_SCALAR_DEGREE or bits > MAX_SCALAR_BITS:
            raise ParseError(
                f"Scalar exceeds degree {MAX_SCALAR_DEGREE} or {MAX_SCALAR_BITS} bits", token.offset, input=self.stream.source
            )

    def _multiply(self, left: DimScalar, right: DimScalar, token: Token) -> DimScalar:
        self._bounded(left.degree() + right.degree(), left.height() + right.height(), token)
        return left * right

    def _divide(self, left: DimScalar, right: DimScalar, token: Token) -> DimScalar:
        self._bounded(left.degree() + right.degree(), left.height() + right.height(), token)
        try:
            return left / right
        except DivisionByZero:
            raise ParseError("Division by zero", token.offset, input=self.stream.source)

    def _scalar_atom(self) -> DimScalar:
        token = self.stream.peek()
        if token.kind is TokenKind.NUMBER:
            self.stream.advance()
            value = DimScalar(int(token.text))
        elif token.kind is TokenKind.NAME and token.text == "m":
            self.stream.advance()
            value = M
        elif token.is_symbol("("):
            self.stream.advance()
            self._enter(token)
            value = self._scalar_sum()
            self.stream.expect_symbol(")")
            self.depth -= 1
        else:
            raise self.stream.fail("Expected a scalar", {"number", "m", "("})

        if self.stream.peek().is_symbol("^"):
            self.stream.advance()
            exponent_token = self.stream.peek()
            exponent = self._exponent()
            self._bounded(value.degree() * exponent, value.height() * exponent, exponent_token)
            value = value ** exponent
        return value

    def _scalar_sum(self) -> DimScalar:
        negative: bool = False
        if self.stream.peek().is_symbol("-") or self.stream.peek().is_symbol("+"):
            negative = self.stream.advance().text == "-"
        value = self._scalar_product()
        if negative:
            value = -value
        while self.stream.peek().is_symbol("+") or self.stream.peek().is_symbol("-"):
            operator = self.stream.advance().text
            right = self._scalar_product()
            value = value + right if operator == "+" else value - right
        return value

    def _scalar_product(self) -> DimScalar:
        value = self._scalar_atom()
        while True:
            token = self.stream.peek()
            if token.is_symbol("*"):
                self.stream.advance()
                factor_token = self.stream.peek()
                value = self._multiply(value, self._scalar_atom(), factor_token)
            elif token.is_symbol("/"):
                self.stream.advance()
                divisor_token = self.stream.peek()
                value = self._divide(value, self._scalar_atom(), divisor_token)
            elif token.kind is TokenKind.NUMBER or (token.kind is TokenKind.NAME and token.text == "m") or token.is_symbol("("):
                value = self._multiply(value, self._scalar_atom(), token)
            else:
                return value

# 문자열을 구문 트리로 읽는 기능
def parse(text: str) -> Expr:
    """
    :param text: 식 문자열, 예) "r (w dr) delta"
    :return: Expr 구문 트리
    """
    expression = ExpressionParser(text).parse()
    logger.debug("parsed %r", text)
    return expression
