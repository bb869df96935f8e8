"""Standard and PSD forts, their enumeration, and the fort-hitting forcing test."""

from __future__ import annotations

from collections.abc import Sequence
from functools import lru_cache
from itertools import combinations

from forcing_lab.config import ensure_within_cap
from forcing_lab.graphs.algebra import component_masks
from forcing_lab.models.graph import Graph, VertexSet, iter_bits
from forcing_lab.models.results import FortFamily
from forcing_lab.models.rule import Rule


def _standard_fort_bits(adj: Sequence[int], full: int, f: int) -> bool:
    if not f:
        return False
    for v in iter_bits(full & ~f):
        if (adj[v] & f).bit_count() == 1:
            return False
    return True


def _psd_fort_bits(adj: Sequence[int], full: int, f: int) -> bool:
    if not f:
        return False
    parts = component_masks(adj, f)
    for v in iter_bits(full & ~f):
        row = adj[v]
        for part in parts:
            if (row & part).bit_count() == 1:
                return False
    return True


def is_standard_fort(g: Graph, f: VertexSet) -> bool:
    """No vertex outside ``f`` has exactly one neighbour in ``f``."""
    return _standard_fort_bits(g.adj, g.full, f.bits)


def is_psd_fort(g: Graph, f: VertexSet) -> bool:
    """No outside vertex has exactly one neighbour in any component of ``g[f]``."""
    return _psd_fort_bits(g.adj, g.full, f.bits)


def is_fort(g: Graph, f: VertexSet, rule: Rule) -> bool:
    return is_psd_fort(g, f) if rule is Rule.PSD else is_standard_fort(g, f)


@lru_cache(maxsize=32)
def _fort_masks(g: Graph, rule: Rule, minimal_only: bool) -> tuple[int, ...]:
    predicate = _psd_fort_bits if rule is Rule.PSD else _standard_fort_bits
    found: list[int] = []
    for size in range(1, g.n + 1):
        for combo in combinations(range(g.n), size):
            mask = 0
            for v in combo:
                mask |= 1 << v
            if minimal_only and any(kept & mask == kept for kept in found):
                continue
            if predicate(g.adj, g.full, mask):
                found.append(mask)
    return tuple(found)


def enumerate_forts(
    g: Graph,
    rule: Rule,
    minimal_only: bool = False,
    *,
    cap: int | None = None,
) -> FortFamily:
    """All forts (or the inclusion-minimal ones) ordered by size, then lexicographically."""
    ensure_within_cap(g.n, cap, "enumerate_forts")
    masks = _fort_masks(g, rule, minimal_only)
    return FortFamily(
        rule=rule,
        forts=tuple(VertexSet(g.n, mask) for mask in masks),
        minimal_only=minimal_only,
    )


def hits_all_forts(g: Graph, b: VertexSet, rule: Rule, *, cap: int | None = None) -> bool:
    """``b`` meets every minimal fort; equivalent to ``b`` being a forcing set."""
    ensure_within_cap(g.n, cap, "hits_all_forts")
    return all(mask & b.bits for mask in _fort_masks(g, rule, True))


def minimum_fort_transversal_size(g: Graph, rule: Rule, *, cap: int | None = None) -> int:
    """Size of the smallest set meeting every minimal fort (the forcing number)."""
    ensure_within_cap(g.n, cap, "minimum_fort_transversal_size")
    forts = _fort_masks(g, rule, True)
    for size in range(g.n + 1):
        for combo in combinations(range(g.n), size):
            mask = 0
            for v in combo:
                mask |= 1 << v
            if all(fort & mask for fort in forts):
                return size
    return g.n


__all__ = [
    "enumerate_forts",
    "hits_all_forts",
    "is_fort",
    "is_psd_fort",
    "is_standard_fort",
    "minimum_fort_transversal_size",
]
