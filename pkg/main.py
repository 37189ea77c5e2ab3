"""
┏━━━━━━━━━━━━━━━━━━━━━━━━━━┓
┃ Signumcalc Radial Engine ┃
┗━━━━━━━━━━━━━━━━━━━━━━━━━━┛
version : 1.0.0
"""

# Libraries
import argparse
import json
import sys

from pydantic import ValidationError

from Commands import CliConfig
from Commands import normalize, pair, verify, table
from Utilities.error_tools import CalcError, UsageError
from Utilities.logging_tools import get_logger

logger = get_logger("System")

# ========== Parser 설정 ==========

class CliParser(argparse.ArgumentParser):
    # argparse 오류를 UsageError 로 바꿔서 한 곳에서 처리
    def error(self, message: str):
        raise UsageError(message, input=" ".join(sys.argv[1:]) or None)

def build_parser() -> CliParser:
    parser = CliParser(prog="signumcalc", description="Radial operators on delta and signumdistributions")
    subparsers = parser.add_subparsers(dest="command", required=True, parser_class=CliParser)

    # ========== 기능 불러오기 ==========
    normalize.register(subparsers)
    pair.register(subparsers)
    verify.register(subparsers)
    table.register(subparsers)
    return parser

# ========== 실행 부분 ==========

def report_error(error: CalcError) -> int:
    print(json.dumps(error.detail, ensure_ascii=False), file=sys.stderr)
    return error.exit_code

# 명령줄 실행 기능
def run_cli(argv: list[str] | None = None) -> int:
    """
    :param argv: 명령줄 인자 (없으면 sys.argv[1:])
    :return: 종료 코드 (0 성공, 1 검증 실패, 2 사용법 / 구문 오류, 3 지원하지 않는 작용)
    """
    try:
        arguments = build_parser().parse_args(argv)
        values: dict = vars(arguments)
        handler = values.pop("handler")
        try:
            config = CliConfig(**values)
        except ValidationError as error:
            first: dict = error.errors()[0]
            location: str = ".".join(str(part) for part in first["loc"])
            raise UsageError(f"Invalid value for {location}: {first['msg']}", input=first.get("input"))
        return handler(config)
    except CalcError as error:
        logger.error(f"{error.error_type}: {error}")
        return report_error(error)
    except SystemExit as exit_request:
        # --help 와 --version
        return exit_request.code if isinstance(exit_request.code, int) else 0

if __name__ == "__main__":
    sys.exit(run_cli())
