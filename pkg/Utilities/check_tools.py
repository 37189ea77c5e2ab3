"""
┏━━━━━━━━━━━━━━━━━━━━━━━━━━┓
┃ Signumcalc Radial Engine ┃
┗━━━━━━━━━━━━━━━━━━━━━━━━━━┛
Input Check Tools
"""

# Libraries
from Utilities.error_tools import DomainError, UsageError

def is_valid_dimension(m: int) -> bool:
    """
    입력된 차원이 구면 평균을 정의할 수 있는 값인지 확인
    :param m: 차원 int
    :return: 유효한지 여부 bool
    """
    return isinstance(m, int) and not isinstance(m, bool) and m >= 2

# 차원 하나를 확인하는 기능
def check_dimension(m: int) -> int:
    if not is_valid_dimension(m):
        raise DomainError(f"Dimension must be an integer >= 2, got {m}", input=m)
    return m

# "2,3,5" 형태의 차원 목록을 읽는 기능
def parse_dims(text: str) -> list[int]:
    """
    :param text: 쉼표로 구분된 정수 목록
    :return: 중복 없이 정렬된 차원 목록
    """
    pieces: list[str] = [piece.strip() for piece in text.split(",") if piece.strip()]
    if not pieces:
        raise UsageError("At least one dimension is required", input=text)

    dims: set[int] = set()
    for piece in pieces:
        try:
            value = int(piece)
        except ValueError:
            raise UsageError(f"Dimension is not an integer: {piece}", input=text)
        if not is_valid_dimension(value):
            raise UsageError(f"Dimension must be at least 2, got {value}", input=text)
        dims.add(value)
    return sorted(dims)
