"""Pydantic models for verdicts, omega values and harness reports."""
from __future__ import annotations

from typing import Literal

import pandas as pd
from pydantic import BaseModel, ConfigDict, Field

INFINITE = "INFINITE"

SCHEMA_VERSION = "1.0"


class Verdict(BaseModel):
    """Outcome of a classification query."""
    model_config = ConfigDict(frozen=True)

    holds: bool
    witness_s: int | None = None
    witnesses: tuple[int, ...] = ()
    counterexample: tuple[int, ...] | None = None
    tuples_examined: int = 0
    note: str | None = None
    elapsed: float = Field(0.0, exclude=True)


class OmegaValue(BaseModel):
    """Least n making an ideal S-n-absorbing."""
    model_config = ConfigDict(frozen=True)

    value: int | Literal["INFINITE"]
    bound_used: int
    witness_s: int | None = None

    @property
    def is_finite(self) -> bool:
        return self.value != INFINITE


class SVariantRecord(BaseModel):
    """S-prime, S-primary and strongly S-primary verdicts for one ideal."""
    model_config = ConfigDict(frozen=True)

    S_prime: Verdict
    S_primary: Verdict
    strongly_S_primary: Verdict
    strong_exponent: int | None = None


class RingClassRecord(BaseModel):
    """Divided / locally divided / chained / arithmetical verdicts for one ring."""
    model_config = ConfigDict(frozen=True)

    divided: Verdict
    locally_divided: Verdict
    chained: Verdict
    arithmetical: Verdict


class CorpusSpec(BaseModel):
    """Which rings, multiplicative sets and n values a verify run covers."""

    name: str = "custom"
    ring_exprs: list[str]
    multset_policy: Literal["family", "units", "trivial"] = "family"
    n_min: int = Field(1, ge=1)
    n_max: int = Field(3, ge=1)
    small_order: int = 16
    small_n_max: int = 4
    max_order: int = 256
    time_cap: float = 30.0

    def n_range(self, order: int) -> range:
        top = self.small_n_max if order <= self.small_order else self.n_max
        return range(self.n_min, top + 1)


class CheckOutcome(BaseModel):
    """One instance of one registered check."""

    check: str
    instance: str
    status: Literal["passed", "failed", "skipped"]
    detail: str | None = None
    replay: str | None = None


class CheckSummary(BaseModel):
    check: str
    run: int = 0
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    skip_reasons: dict[str, int] = Field(default_factory=dict)


class ReportEntry(BaseModel):
    """A named query result inside a report."""

    name: str
    verdict: Verdict | None = None
    omega: OmegaValue | None = None
    value: str | None = None


class Report(BaseModel):
    """Machine-readable result of a CLI command."""

    schema_version: str = SCHEMA_VERSION
    command: str
    entries: list[ReportEntry] = Field(default_factory=list)
    summaries: list[CheckSummary] = Field(default_factory=list)
    failures: list[CheckOutcome] = Field(default_factory=list)
    notes: list[str] = Field(default_factory=list)
    checks_run: int = 0
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    wall_time: float | None = None

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def summary_frame(self) -> pd.DataFrame:
        """Per-check totals as a table."""
        rows = [s.model_dump(exclude={"skip_reasons"}) for s in self.summaries]
        df = pd.DataFrame(rows, columns=["check", "run", "passed", "failed", "skipped"])
        df.columns = ["Check", "Run", "Passed", "Failed", "Skipped"]
        return df

    def to_json(self, include_timings: bool = False) -> str:
        exclude = None if include_timings else {"wall_time"}
        return self.model_dump_json(indent=2, exclude=exclude)
