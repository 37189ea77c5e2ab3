"""
┏━━━━━━━━━━━━━━━━━━━━━━━━━━┓
┃ Signumcalc Radial Engine ┃
┗━━━━━━━━━━━━━━━━━━━━━━━━━━┛
Environment Configuration Tools
"""

# Libraries
import os
from dotenv import load_dotenv

load_dotenv()  # .env 파일이 있으면 환경 변수로 불러오기

DEFAULT_SEED: int = 0
DEFAULT_WORKERS: int = 1

# 환경 변수는 호출 시점에 읽어야 flag > env > 기본값 순서가 지켜짐
def default_seed() -> int:
    """
    SIGNUMCALC_SEED 환경 변수에서 기본 seed 값을 읽는 기능
    :return: seed int (없거나 잘못된 값이면 0)
    """
    raw: str | None = os.getenv("SIGNUMCALC_SEED")
    try:
        return int(raw) if raw not in (None, "") else DEFAULT_SEED
    except ValueError:
        return DEFAULT_SEED

def default_workers() -> int:
    """
    SIGNUMCALC_WORKERS 환경 변수에서 suite 동시 실행 개수를 읽는 기능
    :return: worker 개수 int (최소 1)
    """
    raw: str | None = os.getenv("SIGNUMCALC_WORKERS")
    try:
        return max(1, int(raw)) if raw not in (None, "") else DEFAULT_WORKERS
    except ValueError:
        return DEFAULT_WORKERS

def log_level() -> str:
    level: str = os.getenv("SIGNUMCALC_LOG_LEVEL", "WARNING").upper()
    return level if level in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL") else "WARNING"
