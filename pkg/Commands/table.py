"""
┏━━━━━━━━━━━━━━━━━━━━━━━━━━┓
┃ Signumcalc Radial Engine ┃
┗━━━━━━━━━━━━━━━━━━━━━━━━━━┛
Parts of Table
"""

# Libraries
import json

from Algebra import DimScalar
from Commands.models import CliConfig, OutputFormat, TableFamily, TABLE_ALIASES
from Kernel import Distribution, RADIAL_FAMILIES, prop35_coefficient, x_power_identity
from Oracle import SCHEMA_VERSION, TableRow
from Utilities.logging_tools import *

logger = get_logger("Cli_Table")

DEFAULT_KMAX: int = 4
DEFAULT_LMAX: int = 4

# 각 family 가 나타내는 곱의 표기
PRODUCT_TEXT: dict[TableFamily, dict[str, str]] = {
    TableFamily.PROP35: {
        "i": "r^(2l) dr^(2k) delta",
        "ii": "w r^(2l+1) dr^(2k) delta",
        "iii": "w r^(2l) dr^(2k+1) delta",
        "iv": "r^(2l+1) dr^(2k+1) delta",
    },
    TableFamily.IDENTITIES_X: {
        "i": "x^(2l) D^(2k) delta",
        "ii": "x^(2l+1) D^(2k) delta",
        "iii": "x^(2l) D^(2k+1) delta",
        "iv": "x^(2l+1) D^(2k+1) delta",
    },
}

# table 명령 등록 기능
def register(subparsers) -> None:
    parser = subparsers.add_parser("table", help="print closed-form coefficient tables")
    families: str = ", ".join([item.value for item in TableFamily] + list(TABLE_ALIASES))
    parser.add_argument("--family", default=TableFamily.PROP35.value, help=f"coefficient family: {families}")
    parser.add_argument("--kmax", type=int)
    parser.add_argument("--lmax", type=int)
    parser.add_argument("--m", dest="m0", type=int, help="fix the dimension (default: symbolic m)")
    parser.add_argument("--format", choices=[item.value for item in OutputFormat])
    parser.set_defaults(handler=run)

# 계수표를 만드는 기능
def build_rows(family: TableFamily, kmax: int, lmax: int, dim: DimScalar) -> list[TableRow]:
    """
    family 별 i~iv, 0 <= l <= min(k, lmax), 0 <= k <= kmax
    :param family: TableFamily
    :param dim: 기호 m 또는 고정된 차원
    :return: TableRow 목록
    """
    closed_form = prop35_coefficient if family is TableFamily.PROP35 else x_power_identity
    rows: list[TableRow] = []
    for label in RADIAL_FAMILIES:
        for k in range(kmax + 1):
            for l in range(min(k, lmax) + 1):
                coefficient, target = closed_form(label, k, l, dim)
                rows.append(TableRow(
                    family=label,
                    k=k,
                    l=l,
                    coefficient=coefficient.render(),
                    target=None if target is None else Distribution.basis(target).basis_text(target)
                ))
    return rows

def to_markdown(family: TableFamily, rows: list[TableRow]) -> str:
    lines: list[str] = [
        "| family | k | l | product | coefficient | target |",
        "| --- | --- | --- | --- | --- | --- |",
    ]
    for row in rows:
        product: str = PRODUCT_TEXT[family][row.family]
        lines.append(f"| {row.family} | {row.k} | {row.l} | {product} | {row.coefficient} | {row.target or '-'} |")
    return "\n".join(lines)

def run(config: CliConfig) -> int:
    kmax: int = DEFAULT_KMAX if config.kmax is None else config.kmax
    lmax: int = DEFAULT_LMAX if config.lmax is None else config.lmax
    rows: list[TableRow] = build_rows(config.family, kmax, lmax, config.dim)
    logger.debug(f"built {len(rows)} rows for {config.family.value}")

    output_format: OutputFormat = config.output_format(OutputFormat.MD)
    if output_format is OutputFormat.JSON:
        print(json.dumps({
            "schema": SCHEMA_VERSION,
            "family": config.family.value,
            "m": config.m0,
            "rows": [row.model_dump(mode="json") for row in rows],
        }, indent=2, ensure_ascii=False))
    elif output_format is OutputFormat.TEXT:
        for row in rows:
            target: str = f" * {row.target}" if row.target else ""
            print(f"{row.family} k={row.k} l={row.l}: {row.coefficient}{target}")
    else:
        print(to_markdown(config.family, rows))
    return 0
