"""
┏━━━━━━━━━━━━━━━━━━━━━━━━━━┓
┃ Signumcalc Radial Engine ┃
┗━━━━━━━━━━━━━━━━━━━━━━━━━━┛
Oracle Data Models
"""

# Libraries
import json
from typing import Literal, Optional

from pydantic import BaseModel, Field, field_validator

from Utilities.config_tools import default_seed, default_workers

SCHEMA_VERSION: str = "1"

class OracleConfig(BaseModel):
    """
    검증 suite 실행 설정
    """
    kmax: int = 4  # radial 미분 번호 k 의 상한
    lmax: int = 4  # r 거듭제곱 번호 l 의 상한
    nmax: int = 12  # Dirac 거듭제곱 기저 번호의 상한
    dims: list[int] = Field(default_factory=lambda: [2, 3, 5])  # 확인할 차원 m
    trials: int = 25  # 차원마다 사용할 임의 다항식 개수
    max_degree: int = 8  # 임의 다항식의 최대 차수
    seed: int = Field(default_factory=default_seed)
    workers: int = Field(default_factory=default_workers)  # suite 항목 동시 실행 개수

    @field_validator("kmax", "lmax", "nmax", "max_degree")
    def check_bound(cls, value):
        if value < 0:
            raise ValueError("bounds must be non-negative")
        return value

    @field_validator("trials", "workers")
    def check_positive(cls, value):
        if value < 1:
            raise ValueError("must be at least 1")
        return value

    @field_validator("dims")
    def check_dims(cls, value):
        if not value:
            raise ValueError("at least one dimension is required")
        if any(m < 2 for m in value):
            raise ValueError("dimensions must be at least 2")
        return sorted(set(value))

class SuiteEntry(BaseModel):
    """
    항등식 하나의 검증 결과
    """
    id: str
    status: Literal["pass", "fail"]
    lhs: str
    rhs: str
    dims: list[int]
    seed: int
    note: Optional[str] = None  # 실패 원인이나 규약 메모

    @property
    def passed(self) -> bool:
        return self.status == "pass"

class SuiteReport(BaseModel):
    """
    suite 하나의 결과, 항목은 id 순서로 정렬됨
    """
    suite: str
    entries: list[SuiteEntry] = []

    @property
    def passed(self) -> bool:
        return all(entry.passed for entry in self.entries)

    def failures(self) -> list[SuiteEntry]:
        return [entry for entry in self.entries if not entry.passed]

    def to_json_dict(self) -> dict:
        return self.model_dump(mode="json", exclude_none=True)

    def to_markdown(self) -> str:
        """
        | id | status | lhs | rhs | dims | seed | 형태의 표
        """
        lines: list[str] = [
            f"### {self.suite}",
            "",
            "| id | status | lhs | rhs | dims | seed |",
            "| --- | --- | --- | --- | --- | --- |",
        ]
        for entry in self.entries:
            dims: str = ",".join(str(m) for m in entry.dims)
            lines.append(f"| {entry.id} | {entry.status} | `{entry.lhs}` | `{entry.rhs}` | {dims} | {entry.seed} |")
        return "\n".join(lines)

    def to_text(self) -> str:
        lines: list[str] = []
        for entry in self.entries:
            line = f"[{entry.status}] {self.suite}/{entry.id}: {entry.lhs} = {entry.rhs}"
            if entry.note:
                line += f"  ({entry.note})"
            lines.append(line)
        total: int = len(self.entries)
        lines.append(f"{self.suite}: {total - len(self.failures())}/{total} passed")
        return "\n".join(lines)

class VerifyReport(BaseModel):
    """
    verify 명령 전체 결과
    """
    schema_version: str = Field(default=SCHEMA_VERSION, serialization_alias="schema")
    suites: list[SuiteReport] = []

    @property
    def passed(self) -> bool:
        return all(report.passed for report in self.suites)

    def to_json(self) -> str:
        data: dict = self.model_dump(mode="json", by_alias=True, exclude_none=True)
        data["passed"] = self.passed
        return json.dumps(data, indent=2, ensure_ascii=False)

    def to_markdown(self) -> str:
        return "\n\n".join(report.to_markdown() for report in self.suites)

    def to_text(self) -> str:
        return "\n".join(report.to_text() for report in self.suites)

class TableRow(BaseModel):
    """
    계수표 한 줄: (family, k, l, coefficient, target basis)
    """
    family: str
    k: int
    l: int
    coefficient: str
    target: Optional[str] = None  # 계수가 0 이면 None
