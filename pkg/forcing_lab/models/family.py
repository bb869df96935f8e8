"""Named graph family specifications."""

from __future__ import annotations

from enum import Enum

from pydantic import BaseModel, ConfigDict, model_validator


class FamilyName(str, Enum):
    PATH = "path"
    CYCLE = "cycle"
    COMPLETE = "complete"
    COMPLETE_BIPARTITE = "complete_bipartite"
    STAR = "star"
    WHEEL = "wheel"
    EMPTY = "empty"
    SGAP = "sgap"


_MIN_ORDER = {
    FamilyName.PATH: 1,
    FamilyName.CYCLE: 3,
    FamilyName.COMPLETE: 1,
    FamilyName.STAR: 2,
    FamilyName.WHEEL: 4,
    FamilyName.EMPTY: 1,
}


class FamilySpec(BaseModel):
    """A deterministic family member, e.g. ``FamilySpec(family="cycle", n=5)``.

    ``n`` is the order for every family except ``complete_bipartite`` (sides
    ``n`` and ``m``) and ``sgap`` (parameter ``k``, order ``15 + 4k``).
    """

    family: FamilyName
    n: int | None = None
    m: int | None = None
    k: int | None = None

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _check_parameters(self) -> FamilySpec:
        if self.family is FamilyName.SGAP:
            if self.k is None or self.k < 0:
                raise ValueError("sgap requires k >= 0.")
            return self
        if self.family is FamilyName.COMPLETE_BIPARTITE:
            if self.n is None or self.m is None or self.n < 1 or self.m < 1:
                raise ValueError("complete_bipartite requires n >= 1 and m >= 1.")
            return self
        minimum = _MIN_ORDER[self.family]
        if self.n is None or self.n < minimum:
            raise ValueError(f"{self.family.value} requires n >= {minimum}.")
        return self


__all__ = ["FamilyName", "FamilySpec"]
