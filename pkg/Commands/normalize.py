"""
┏━━━━━━━━━━━━━━━━━━━━━━━━━━┓
┃ Signumcalc Radial Engine ┃
┗━━━━━━━━━━━━━━━━━━━━━━━━━━┛
Parts of Normalize
"""

# Libraries
import json

from Commands.models import CliConfig, OutputFormat
from Kernel import GeneralizedFunction, radial_to_text, has_alias
from Oracle import SCHEMA_VERSION
from Parser import normalize
from Utilities.logging_tools import *

logger = get_logger("Cli_Normalize")

# normalize 명령 등록 기능
def register(subparsers) -> None:
    parser = subparsers.add_parser("normalize", help="print the canonical form of an expression")
    parser.add_argument("expression", help='expression, e.g. "dr^2 delta"')
    parser.add_argument("--m", dest="m0", type=int, help="fix the dimension (default: symbolic m)")
    parser.add_argument("--format", choices=[item.value for item in OutputFormat])
    parser.set_defaults(handler=run)

# 결과를 형식에 맞게 문자열로 만드는 기능
def render(result: GeneralizedFunction, config: CliConfig) -> str:
    """
    text: DIST 는 한 줄, SIGN 은 "c * s[n]" 줄과 "= radial 표기" 줄
    :param result: 계산 결과
    :param config: CliConfig
    :return: 출력 문자열
    """
    alias: str | None = radial_to_text(result, config.dim) if has_alias(result) else None
    output_format: OutputFormat = config.output_format(OutputFormat.TEXT)

    if output_format is OutputFormat.JSON:
        data: dict = {
            "schema": SCHEMA_VERSION,
            "input": config.expression,
            "space": result.space.value,
            "m": config.m0,
            "terms": [{"n": n, "coefficient": coefficient.render()} for n, coefficient in result.items()],
            "text": result.render(),
        }
        if alias is not None:
            data["alias"] = alias
        return json.dumps(data, indent=2, ensure_ascii=False)

    if output_format is OutputFormat.MD:
        lines: list[str] = [f"`{config.expression}` = `{result.render()}`"]
        if alias is not None:
            lines.append(f"`{config.expression}` = `{alias}`")
        return "\n\n".join(lines)

    lines = [result.render()]
    if alias is not None:
        lines.append(f"= {alias}")
    return "\n".join(lines)

def run(config: CliConfig) -> int:
    result: GeneralizedFunction = normalize(config.expression, config.m0)
    logger.debug(f"normalized {config.expression!r} to {result.render()}")
    print(render(result, config))
    return 0
