"""
┏━━━━━━━━━━━━━━━━━━━━━━━━━━┓
┃ Signumcalc Radial Engine ┃
┗━━━━━━━━━━━━━━━━━━━━━━━━━━┛
Tokenizer
"""

# Libraries
from dataclasses import dataclass
from enum import Enum as BaseEnum

from Utilities.error_tools import ParseError

# Enum
class TokenKind(BaseEnum):
    NUMBER = "number"
    NAME = "name"
    SYMBOL = "symbol"
    END = "end of input"

SYMBOLS: str = "+-*/^()"

@dataclass(frozen=True)
class Token:
    kind: TokenKind
    text: str
    offset: int  # 입력 시작부터의 byte 위치

    def is_symbol(self, text: str) -> bool:
        return self.kind is TokenKind.SYMBOL and self.text == text

    def describe(self) -> str:
        return self.kind.value if self.kind is TokenKind.END else f"'{self.text}'"

# 문자열을 Token 목록으로 나누는 기능
def tokenize(source: str) -> list[Token]:
    """
    공백은 무시, 이름은 영문자로 시작하고 영문자 / 숫자 / '_' 로 이어짐
    :param source: 입력 문자열
    :return: 마지막이 END 인 Token 목록
    """
    tokens: list[Token] = []
    index: int = 0
    offset: int = 0  # byte 단위 위치

    while index < len(source):
        char: str = source[index]
        width: int = len(char.encode("utf-8", errors="surrogatepass"))

        if char in " \t\r\n":
            index += 1
            offset += width
            continue

        if char.isascii() and char.isdigit():
            start, start_offset = index, offset
            while index < len(source) and source[index].isascii() and source[index].isdigit():
                index += 1
            offset += index - start
            tokens.append(Token(TokenKind.NUMBER, source[start:index], start_offset))
            continue

        if char.isascii() and char.isalpha():
            start, start_offset = index, offset
            while index < len(source) and source[index].isascii() and (source[index].isalnum() or source[index] == "_"):
                index += 1
            offset += index - start
            tokens.append(Token(TokenKind.NAME, source[start:index], start_offset))
            continue

        if char in SYMBOLS:
            tokens.append(Token(TokenKind.SYMBOL, char, offset))
            index += 1
            offset += width
            continue

        raise ParseError(f"Unexpected character {char!r}", offset, input=source)

    tokens.append(Token(TokenKind.END, "", offset))
    return tokens

class TokenStream:
    """
    Token 목록을 앞에서부터 읽는 커서
    """

    def __init__(self, source: str):
        self.source = source
        self.tokens = tokenize(source)
        self.position = 0

    def peek(self, ahead: int = 0) -> Token:
        return self.tokens[min(self.position + ahead, len(self.tokens) - 1)]

    def advance(self) -> Token:
        token = self.peek()
        if token.kind is not TokenKind.END:
            self.position += 1
        return token

    def at_end(self) -> bool:
        return self.peek().kind is TokenKind.END

    def fail(self, message: str, expected: set[str], token: Token | None = None) -> ParseError:
        token = token or self.peek()
        return ParseError(f"{message}, found {token.describe()}", token.offset, expected, input=self.source)

    def expect_symbol(self, text: str) -> Token:
        token = self.peek()
        if not token.is_symbol(text):
            raise self.fail(f"Expected '{text}'", {text})
        return self.advance()

    def expect_number(self) -> Token:
        token = self.peek()
        if token.kind is not TokenKind.NUMBER:
            raise self.fail("Expected a number", {"number"})
        return self.advance()
