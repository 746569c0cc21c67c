"""
CLI request and suite report models
"""

from enum import Enum
from typing import Any, Optional

from pydantic import BaseModel, ConfigDict, Field, computed_field


class OutputFormat(str, Enum):
    CSV = "csv"
    JSON = "json"
    PRETTY = "pretty"


class Subcommand(str, Enum):
    REP = "rep"
    DIST = "dist"
    CHECK = "check"
    CHARPOLY = "charpoly"
    QMAP = "qmap"
    PRIME_QUNIT = "prime-qunit"
    ENTROPY = "entropy"


class CommandRequest(BaseModel):
    """Validated CLI invocation"""

    model_config = ConfigDict(extra="forbid", frozen=True)

    subcommand: Subcommand
    parameters: dict[str, Any] = Field(default_factory=dict)
    output_format: OutputFormat = OutputFormat.CSV
    tolerance: float = Field(default=1e-10, gt=0)


class CheckResult(BaseModel):
    """One identity check: residual against threshold"""

    name: str
    residual: float
    threshold: float
    note: Optional[str] = None

    @computed_field
    @property
    def passed(self) -> bool:
        return bool(self.residual <= self.threshold)


class SuiteReport(BaseModel):
    """Results of one or more suites"""

    suite: str
    checks: list[CheckResult] = Field(default_factory=list)

    @computed_field
    @property
    def overall(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(
        self, name: str, residual: float, threshold: float, note: Optional[str] = None
    ) -> CheckResult:
        result = CheckResult(
            name=name, residual=float(residual), threshold=threshold, note=note
        )
        self.checks.append(result)
        return result

    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]

    @classmethod
    def merge(cls, suite: str, reports: list["SuiteReport"]) -> "SuiteReport":
        merged = cls(suite=suite)
        for report in reports:
            for check in report.checks:
                merged.checks.append(
                    check.model_copy(update={"name": f"{report.suite}.{check.name}"})
                )
        return merged
