"""Sweep configuration and report models."""

from enum import Enum
from typing import Any, Literal

from pydantic import BaseModel, ConfigDict, Field


class TargetName(str, Enum):
    """Verification targets a sweep can run."""

    REMAINDERS = "remainders"
    ETA_SCALING = "eta-scaling"
    THETA = "theta"
    THETA_REP = "theta-rep"
    SCALED = "scaled"
    ORTHOGONALITY = "orthogonality"
    RATE_FIT = "rate-fit"


class SweepConfig(BaseModel):
    """What to run, over which grid, and where to write the report."""

    model_config = ConfigDict(
        json_schema_extra={
            "example": {
                "target": "theta-rep",
                "grid": [{"q": 0.5, "z": "2", "n": 12}],
                "options": {"family": "aq"},
                "precision_bits": 256,
            }
        }
    )

    target: TargetName
    grid: list[dict[str, Any]] = Field(default_factory=list, description="Parameter tuples")
    options: dict[str, Any] = Field(default_factory=dict, description="Target-wide settings")
    precision_bits: int = Field(256, ge=64)
    guard_bits: int = Field(32, ge=16)
    max_terms: int = Field(100_000, ge=1024)
    output_path: str | None = Field(None, description="None writes to stdout")
    output_format: Literal["csv", "json"] = "csv"
    fail_fast: bool = False
    jobs: int = Field(1, ge=1)
    include_timing: bool = Field(False, description="Add the wall_ms column")


class SweepRow(BaseModel):
    """One evaluated grid point."""

    index: int
    target: str
    parameters: dict[str, Any]
    values: dict[str, Any] = Field(default_factory=dict)
    measured: float | None = Field(None, description="Quantity compared with the bound")
    bound: float | None = None
    status: Literal["pass", "fail", "skip"]
    reason: str = ""
    wall_ms: float = 0.0

    @property
    def ratio(self) -> float | None:
        """measured / bound where both are known."""
        if self.measured is None or not self.bound:
            return None
        return abs(self.measured) / self.bound


class SweepSummary(BaseModel):
    """Row counts by status."""

    total: int = 0
    passed: int = 0
    failed: int = 0
    skipped: int = 0


class SweepReport(BaseModel):
    """All rows of a sweep in grid order, with counts and the worst row."""

    target: str
    rows: list[SweepRow] = Field(default_factory=list)
    summary: SweepSummary = Field(default_factory=SweepSummary)
    worst_case: SweepRow | None = None
    aborted: bool = Field(False, description="Stopped early by fail-fast")

    @classmethod
    def from_rows(cls, target: str, rows: list[SweepRow], aborted: bool = False) -> "SweepReport":
        """Assemble a report, counting statuses and picking the worst ratio."""
        summary = SweepSummary(
            total=len(rows),
            passed=sum(1 for r in rows if r.status == "pass"),
            failed=sum(1 for r in rows if r.status == "fail"),
            skipped=sum(1 for r in rows if r.status == "skip"),
        )
        rated = [r for r in rows if r.ratio is not None]
        worst = max(rated, key=lambda r: r.ratio or 0.0) if rated else None
        return cls(target=target, rows=rows, summary=summary, worst_case=worst, aborted=aborted)
