"""
┏━━━━━━━━━━━━━━━━━━━━━━━━━━┓
┃ Signumcalc Radial Engine ┃
┗━━━━━━━━━━━━━━━━━━━━━━━━━━┛
Polynomial Text Format
"""

# Libraries
import re
from fractions import Fraction

from Parser.tokens import TokenStream, TokenKind
from Poly.models import MultiPoly
from Utilities.error_tools import ParseError

VARIABLE = re.compile(r"^x([1-9][0-9]*)$")
MAX_POWER: int = 64

# "3*x1^2*x2 - 1/2*x3" 형태의 문자열을 MultiPoly 로 읽는 기능
def parse_poly(text: str, m: int) -> MultiPoly:
    """
    poly := ['+'|'-'] monomial (('+'|'-') monomial)*
    monomial := factor (['*'] factor)*
    factor := number ['/' number] | x<i> ['^' number]
    :param text: 다항식 문자열
    :param m: 차원 (변수 번호는 1..m)
    :return: MultiPoly
    """
    stream = TokenStream(text)
    result = MultiPoly(m)

    sign: int = 1
    if stream.peek().is_symbol("-") or stream.peek().is_symbol("+"):
        sign = -1 if stream.advance().text == "-" else 1
    result = result + _parse_monomial(stream, m).scale(sign)

    while not stream.at_end():
        token = stream.peek()
        if not (token.is_symbol("+") or token.is_symbol("-")):
            raise stream.fail("Expected '+' or '-'", {"+", "-", "end of input"})
        stream.advance()
        monomial = _parse_monomial(stream, m)
        result = result + (monomial if token.text == "+" else -monomial)
    return result

# 단항식 하나를 읽는 기능
def _parse_monomial(stream: TokenStream, m: int) -> MultiPoly:
    coefficient = Fraction(1)
    exponent: list[int] = [0] * m
    read_any: bool = False

    while True:
        token = stream.peek()
        if read_any and token.is_symbol("*"):
            stream.advance()
            token = stream.peek()
        elif read_any and token.kind not in (TokenKind.NUMBER, TokenKind.NAME):
            break

        if token.kind is TokenKind.NUMBER:
            stream.advance()
            value = Fraction(int(token.text))
            if stream.peek().is_symbol("/"):
                stream.advance()
                denominator = int(stream.expect_number().text)
                if denominator == 0:
                    raise ParseError("Division by zero in coefficient", token.offset, input=stream.source)
                value /= denominator
            coefficient *= value
        elif token.kind is TokenKind.NAME:
            match = VARIABLE.match(token.text)
            if not match or int(match.group(1)) > m:
                raise stream.fail(f"Unknown variable in dimension {m}", {f"x1..x{m}"})
            stream.advance()
            power: int = 1
            if stream.peek().is_symbol("^"):
                stream.advance()
                power_token = stream.expect_number()
                power = int(power_token.text)
                if power > MAX_POWER:
                    raise ParseError(f"Power {power} exceeds {MAX_POWER}", power_token.offset, input=stream.source)
            exponent[int(match.group(1)) - 1] += power
        else:
            raise stream.fail("Expected a coefficient or a variable", {"number", "variable"})
        read_any = True

    return MultiPoly(m, {tuple(exponent): coefficient})
