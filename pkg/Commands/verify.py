"""
┏━━━━━━━━━━━━━━━━━━━━━━━━━━┓
┃ Signumcalc Radial Engine ┃
┗━━━━━━━━━━━━━━━━━━━━━━━━━━┛
Parts of Verify
"""

# Libraries
from Commands.models import CliConfig, OutputFormat
from Oracle import OracleConfig, VerifyReport, SUITES, SUITE_ALIASES, resolve_suite, run_suite, run_all
from Utilities.check_tools import parse_dims
from Utilities.logging_tools import *

logger = get_logger("Cli_Verify")

# verify 명령 등록 기능
def register(subparsers) -> None:
    parser = subparsers.add_parser("verify", help="run verification suites")
    selection = parser.add_mutually_exclusive_group()
    selection.add_argument("--suite", dest="suites", action="append", default=[], metavar="NAME",
                           help=f"suite to run (repeatable): {', '.join(SUITES)}; aliases: {', '.join(SUITE_ALIASES)}")
    selection.add_argument("--all", dest="run_all", action="store_true", help="run every suite (default)")
    parser.add_argument("--kmax", type=int)
    parser.add_argument("--lmax", type=int)
    parser.add_argument("--nmax", type=int)
    parser.add_argument("--m-list", dest="dims", type=parse_dims, metavar="2,3,5")
    parser.add_argument("--seed", type=int, help="overrides SIGNUMCALC_SEED")
    parser.add_argument("--trials", type=int)
    parser.add_argument("--max-degree", dest="max_degree", type=int)
    parser.add_argument("--workers", type=int, help="overrides SIGNUMCALC_WORKERS")
    parser.add_argument("--format", choices=[item.value for item in OutputFormat])
    parser.set_defaults(handler=run)

# 명령 설정에서 OracleConfig 를 만드는 기능
def oracle_config(config: CliConfig) -> OracleConfig:
    """
    입력된 flag 만 넘기고 나머지는 OracleConfig 기본값 (환경 변수 포함)을 사용
    """
    return OracleConfig(**config.given("kmax", "lmax", "nmax", "dims", "seed", "trials", "max_degree", "workers"))

def run(config: CliConfig) -> int:
    settings: OracleConfig = oracle_config(config)
    if config.run_all or not config.suites:
        logger.info(f"running every suite with seed {settings.seed}")
        report = VerifyReport(suites=run_all(settings))
    else:
        names: list[str] = [resolve_suite(name) for name in config.suites]
        logger.info(f"running {len(names)} suite(s) with seed {settings.seed}")
        report = VerifyReport(suites=[run_suite(name, settings) for name in names])

    output_format: OutputFormat = config.output_format(OutputFormat.JSON)
    if output_format is OutputFormat.MD:
        print(report.to_markdown())
    elif output_format is OutputFormat.TEXT:
        print(report.to_text())
    else:
        print(report.to_json())

    if not report.passed:
        failed: int = sum(len(suite.failures()) for suite in report.suites)
        logger.error(f"{failed} identity check(s) failed")
        return 1
    return 0
