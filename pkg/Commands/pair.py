"""
┏━━━━━━━━━━━━━━━━━━━━━━━━━━┓
┃ Signumcalc Radial Engine ┃
┗━━━━━━━━━━━━━━━━━━━━━━━━━━┛
Parts of Pair
"""

# Libraries
import json

from Commands.models import CliConfig, OutputFormat, Route
from Kernel import GeneralizedFunction, Distribution
from Oracle import SCHEMA_VERSION, pair_cartesian, pair_spherical, pair_signum, pair_signum_spherical
from Parser import normalize
from Poly import MultiPoly, PairingValue, parse_poly
from Utilities.error_tools import UsageError
from Utilities.logging_tools import *

logger = get_logger("Cli_Pair")

# pair 명령 등록 기능
def register(subparsers) -> None:
    parser = subparsers.add_parser("pair", help="pair an expression with a test polynomial")
    parser.add_argument("expression", help='expression, e.g. "L delta"')
    parser.add_argument("poly", help='test polynomial, e.g. "3*x1^2*x2 - 1/2*x3"')
    parser.add_argument("--m", dest="m0", type=int, required=True, help="dimension")
    parser.add_argument("--route", choices=[item.value for item in Route], default=Route.BOTH.value)
    parser.add_argument("--format", choices=[item.value for item in OutputFormat])
    parser.set_defaults(handler=run)

# 선택된 경로의 pairing 값을 계산하는 기능
def compute_routes(G: GeneralizedFunction, phi: MultiPoly, m: int, route: Route) -> dict[str, PairingValue]:
    """
    DIST 는 ⟨T, φ⟩, SIGN 은 ⟨S, ωφ⟩
    :return: 경로 이름 -> PairingValue
    """
    if isinstance(G, Distribution):
        routes = {"cartesian": pair_cartesian, "spherical": pair_spherical}
    else:
        routes = {"cartesian": pair_signum, "spherical": pair_signum_spherical}

    names: list[str] = ["cartesian", "spherical"] if route is Route.BOTH else [route.value]
    return {name: routes[name](G, phi, m) for name in names}

def run(config: CliConfig) -> int:
    if config.m0 is None:
        raise UsageError("pair needs --m", input=config.expression)

    G: GeneralizedFunction = normalize(config.expression)
    phi: MultiPoly = parse_poly(config.poly, config.m0)
    values: dict[str, PairingValue] = compute_routes(G, phi, config.m0, config.route)
    first: PairingValue = next(iter(values.values()))
    agree: bool = all(value == first for value in values.values())

    output_format: OutputFormat = config.output_format(OutputFormat.TEXT)
    if output_format is OutputFormat.JSON:
        print(json.dumps({
            "schema": SCHEMA_VERSION,
            "expression": config.expression,
            "poly": phi.to_json(),
            "m": config.m0,
            "routes": {name: value.to_json() for name, value in values.items()},
            "agree": agree,
        }, indent=2, ensure_ascii=False))
    elif output_format is OutputFormat.MD:
        lines: list[str] = ["| route | value |", "| --- | --- |"]
        lines += [f"| {name} | `{value.render()}` |" for name, value in values.items()]
        print("\n".join(lines))
    else:
        text: str = " | ".join(value.render() for value in values.values())
        if len(values) > 1:
            text += " (agree)" if agree else " (disagree)"
        print(text)

    if not agree:
        logger.warning(f"pairing routes disagree for {config.expression!r} and {config.poly!r}")
        return 1
    return 0
