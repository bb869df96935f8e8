"""Result models produced by the forcing engine, fort enumeration and search."""

from __future__ import annotations

from enum import Enum

from pydantic import BaseModel, ConfigDict, Field

from .graph import VertexSet
from .rule import Rule

Force = tuple[int, int]


class PropagationRecord(BaseModel):
    """Full trace of simultaneous-round propagation from an initial blue set.

    ``rounds[i]`` is the set forced in round ``i + 1``; ``closures[i]`` is the
    blue set after ``i`` rounds. ``time`` is ``None`` when the closure never
    reaches the whole vertex set.
    """

    rule: Rule
    initial: VertexSet
    rounds: tuple[VertexSet, ...] = ()
    closures: tuple[VertexSet, ...] = ()
    forces: tuple[tuple[Force, ...], ...] = ()
    time: int | None = None

    model_config = ConfigDict(frozen=True)

    @property
    def is_forcing(self) -> bool:
        return self.time is not None

    @property
    def final_closure(self) -> VertexSet:
        return self.closures[-1]


class FortFamily(BaseModel):
    rule: Rule
    forts: tuple[VertexSet, ...]
    minimal_only: bool

    model_config = ConfigDict(frozen=True)


class FamilyKind(str, Enum):
    MINIMUM = "minimum"
    MINIMAL = "minimal"


class SetFamily(BaseModel):
    """Minimum or minimal forcing sets, ordered by popcount then lexicographically."""

    rule: Rule
    kind: FamilyKind
    sets: tuple[VertexSet, ...]
    cardinality: tuple[int, int]

    model_config = ConfigDict(frozen=True)

    @property
    def min_size(self) -> int:
        return self.cardinality[0]

    @property
    def max_size(self) -> int:
        return self.cardinality[1]

    def sizes(self) -> set[int]:
        return {len(s) for s in self.sets}


class PtSet(BaseModel):
    """Propagation times realized by the minimum (plain) or minimal (expanded) family.

    ``trivial`` marks graphs whose only minimal forcing set is V(G); their
    time set is reported as ``(0,)``.
    """

    rule: Rule
    expanded: bool
    times: tuple[int, ...]
    gaps: tuple[int, ...]
    trivial: bool = False

    model_config = ConfigDict(frozen=True)

    @property
    def lower(self) -> int:
        return self.times[0]

    @property
    def upper(self) -> int:
        return self.times[-1]

    @property
    def is_full(self) -> bool:
        return not self.gaps

    @classmethod
    def from_times(
        cls,
        rule: Rule,
        times: set[int],
        *,
        expanded: bool,
        trivial: bool = False,
    ) -> PtSet:
        ordered = tuple(sorted(times))
        gaps: tuple[int, ...] = ()
        if ordered:
            gaps = tuple(t for t in range(ordered[0], ordered[-1] + 1) if t not in times)
        return cls(rule=rule, expanded=expanded, times=ordered, gaps=gaps, trivial=trivial)


class ForcingReport(BaseModel):
    order: int
    rule: Rule
    z: int
    z_upper: int
    plain: PtSet
    expanded: PtSet
    fixed_pt: int | None = None
    throttling: int | None = None
    witnesses: dict[int, VertexSet] = Field(default_factory=dict)

    model_config = ConfigDict(frozen=True)


__all__ = [
    "FamilyKind",
    "Force",
    "FortFamily",
    "ForcingReport",
    "PropagationRecord",
    "PtSet",
    "SetFamily",
]
