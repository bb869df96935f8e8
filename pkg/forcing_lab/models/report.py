"""JSON-facing records emitted by the command-line surface.

Field names and their order are part of the output format; add fields only
together with a format version bump.
"""

from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field

from .rule import Rule


class FastJoinFlags(BaseModel):
    psd: bool
    standard: bool

    model_config = ConfigDict(frozen=True)


class AnalysisReport(BaseModel):
    """Per-graph analysis. Per-rule fields are keyed by rule value and hold only requested rules."""

    graph6: str
    order: int
    rules: list[Rule]
    z: int | None = None
    z_upper: int | None = None
    zplus: int | None = None
    zplus_upper: int | None = None
    pt_set: dict[str, list[int]] = Field(default_factory=dict)
    ept_set: dict[str, list[int]] = Field(default_factory=dict)
    gaps: dict[str, list[int]] = Field(default_factory=dict)
    fixed_pt: dict[str, int | None] = Field(default_factory=dict)
    trivial: dict[str, bool] = Field(default_factory=dict)
    throttling: int | None = None
    fast_join: FastJoinFlags | None = None
    threshold: bool
    witnesses: dict[str, dict[str, list[int]]] = Field(default_factory=dict)

    model_config = ConfigDict(frozen=True)


class ErrorRecord(BaseModel):
    line: int
    input: str
    error: str

    model_config = ConfigDict(frozen=True)


class CounterexampleRecord(BaseModel):
    counterexample: str
    rule: Rule

    model_config = ConfigDict(frozen=True)


class ConjectureSummary(BaseModel):
    checked: int = 0
    skipped: int = 0
    errors: int = 0
    counterexamples: int = 0


__all__ = [
    "AnalysisReport",
    "ConjectureSummary",
    "CounterexampleRecord",
    "ErrorRecord",
    "FastJoinFlags",
]
