"""Verdict and witness models produced by the structural classifiers."""

from __future__ import annotations

from enum import Enum

from pydantic import BaseModel, ConfigDict

from .graph import VertexSet
from .rule import Rule


class ShapeKind(str, Enum):
    COMPLETE = "complete"
    COMPLETE_BIPARTITE = "complete_bipartite"
    OTHER = "other"


class ComponentShape(BaseModel):
    """Shape of one connected component; ``parts`` is set for complete bipartite ones."""

    vertices: VertexSet
    kind: ShapeKind
    parts: tuple[VertexSet, VertexSet] | None = None

    model_config = ConfigDict(frozen=True)

    @property
    def order(self) -> int:
        return len(self.vertices)

    @property
    def part_sizes(self) -> tuple[int, int] | None:
        if self.parts is None:
            return None
        return (len(self.parts[0]), len(self.parts[1]))


class FastJoinVerdict(BaseModel):
    """Both fast-join recognitions, computed from complement components only.

    ``rule`` is set on verdicts that answer for a single rule; ``fast`` and
    ``reason`` then read that rule's flag and failure reason.
    """

    psd_fast: bool
    standard_fast: bool
    complete: bool
    components: tuple[ComponentShape, ...]
    psd_reason: str | None = None
    standard_reason: str | None = None
    rule: Rule | None = None

    model_config = ConfigDict(frozen=True)

    def is_fast(self, rule: Rule) -> bool:
        return self.psd_fast if rule is Rule.PSD else self.standard_fast

    def reason_for(self, rule: Rule) -> str | None:
        return self.psd_reason if rule is Rule.PSD else self.standard_reason

    def for_rule(self, rule: Rule) -> FastJoinVerdict:
        return self.model_copy(update={"rule": rule})

    @property
    def fast(self) -> bool:
        return self.is_fast(self._scoped_rule())

    @property
    def reason(self) -> str | None:
        return self.reason_for(self._scoped_rule())

    def _scoped_rule(self) -> Rule:
        if self.rule is None:
            raise ValueError("This verdict covers both rules; use is_fast(rule) or reason_for(rule).")
        return self.rule


class TwinKind(str, Enum):
    CLOSED = "closed"
    INDEPENDENT = "independent"


class Twin(BaseModel):
    u: int
    v: int
    kind: TwinKind

    model_config = ConfigDict(frozen=True)


class Pattern(str, Enum):
    """Order-4 patterns; vertex order follows the (w, x, y, z) labelling of the slow-set argument."""

    P4 = "P4"
    P3_K1 = "P3+K1"
    K2_2K1 = "K2+2K1"
    PAW = "paw"
    DIAMOND = "diamond"


class PatternEmbedding(BaseModel):
    pattern: Pattern
    vertices: tuple[int, int, int, int]

    model_config = ConfigDict(frozen=True)


class SlowSetWitness(BaseModel):
    """A proper subset ``slow_set`` expected to force in two or more rounds."""

    slow_set: VertexSet
    white: tuple[int, ...]
    embedding: PatternEmbedding | None = None

    model_config = ConfigDict(frozen=True)


class DominatedPair(BaseModel):
    """Adjacent ``u``, ``v`` with ``N[u]`` strictly inside ``N[v]``; ``slow_set`` is ``V - {u, v}``."""

    u: int
    v: int
    slow_set: VertexSet

    model_config = ConfigDict(frozen=True)


class ConjectureVerdict(BaseModel):
    """Cross-check of upper propagation time 1 against the fast-join forms."""

    graph6: str
    order: int
    psd_upper_pt: int | None = None
    standard_upper_pt: int | None = None
    psd_fast: bool | None = None
    standard_fast: bool | None = None
    psd_counterexample: bool = False
    standard_counterexample: bool = False

    model_config = ConfigDict(frozen=True)

    @property
    def consistent(self) -> bool:
        return not (self.psd_counterexample or self.standard_counterexample)

    def counterexample_rules(self) -> list[Rule]:
        rules = []
        if self.psd_counterexample:
            rules.append(Rule.PSD)
        if self.standard_counterexample:
            rules.append(Rule.STANDARD)
        return rules


__all__ = [
    "ComponentShape",
    "ConjectureVerdict",
    "DominatedPair",
    "FastJoinVerdict",
    "Pattern",
    "PatternEmbedding",
    "ShapeKind",
    "SlowSetWitness",
    "Twin",
    "TwinKind",
]
