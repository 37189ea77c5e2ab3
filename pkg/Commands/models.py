"""
┏━━━━━━━━━━━━━━━━━━━━━━━━━━┓
┃ Signumcalc Radial Engine ┃
┗━━━━━━━━━━━━━━━━━━━━━━━━━━┛
Command Data Models
"""

# Libraries
from enum import Enum as BaseEnum
from typing import Optional

from pydantic import BaseModel, field_validator

from Algebra import DimScalar, M
from Utilities.check_tools import is_valid_dimension

class OutputFormat(BaseEnum):
    TEXT = "text"
    JSON = "json"
    MD = "md"

class Route(BaseEnum):
    CARTESIAN = "cartesian"
    SPHERICAL = "spherical"
    BOTH = "both"

class TableFamily(BaseEnum):
    PROP35 = "prop35"
    IDENTITIES_X = "identities_x"

# 예전 family 이름
TABLE_ALIASES: dict[str, TableFamily] = {
    "radial_power": TableFamily.PROP35,
    "x_power": TableFamily.IDENTITIES_X,
}

class CliConfig(BaseModel):
    """
    명령 한 번의 설정
    입력하지 않은 값은 None 으로 남겨 환경 변수 / 기본값이 적용되게 함
    """
    command: str
    format: Optional[OutputFormat] = None
    m0: Optional[int] = None  # 구체적인 차원 (없으면 기호 m)
    expression: Optional[str] = None
    poly: Optional[str] = None
    route: Route = Route.BOTH
    suites: list[str] = []
    run_all: bool = False
    family: TableFamily = TableFamily.PROP35
    kmax: Optional[int] = None
    lmax: Optional[int] = None
    nmax: Optional[int] = None
    dims: Optional[list[int]] = None
    seed: Optional[int] = None
    trials: Optional[int] = None
    max_degree: Optional[int] = None
    workers: Optional[int] = None

    @field_validator("family", mode="before")
    def resolve_family(cls, value):
        return TABLE_ALIASES.get(value, value) if isinstance(value, str) else value

    @field_validator("m0")
    def check_m0(cls, value):
        if value is not None and not is_valid_dimension(value):
            raise ValueError("m must be at least 2")
        return value

    @field_validator("kmax", "lmax", "nmax", "max_degree")
    def check_bound(cls, value):
        if value is not None and value < 0:
            raise ValueError("bounds must be non-negative")
        return value

    @field_validator("trials", "workers")
    def check_positive(cls, value):
        if value is not None and value < 1:
            raise ValueError("must be at least 1")
        return value

    @property
    def dim(self) -> DimScalar:
        return M if self.m0 is None else DimScalar(self.m0)

    def output_format(self, default: OutputFormat) -> OutputFormat:
        return self.format or default

    def given(self, *names: str) -> dict:
        """
        입력된 (None 이 아닌) 값만 모은 dict
        """
        return {name: getattr(self, name) for name in names if getattr(self, name) is not None}
