"""
┏━━━━━━━━━━━━━━━━━━━━━━━━━━┓
┃ Signumcalc Radial Engine ┃
┗━━━━━━━━━━━━━━━━━━━━━━━━━━┛
Commands
"""

from .models import (
    OutputFormat,
    Route,
    TableFamily,
    TABLE_ALIASES,
    CliConfig
)
