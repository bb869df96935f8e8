"""Twins, universal vertices, leaves, independence number and neighbourhood tests."""

from __future__ import annotations

from forcing_lab.config import ensure_within_cap
from forcing_lab.graphs.algebra import complement, component_masks
from forcing_lab.models.graph import Graph, VertexSet, iter_bits
from forcing_lab.models.verdicts import DominatedPair, ShapeKind, Twin, TwinKind

from .shapes import shape_of_component


def twins(g: Graph) -> list[Twin]:
    """Closed twins (adjacent, ``N[u] = N[v]``) and independent twins (``N(u) = N(v)``)."""
    found: list[Twin] = []
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if g.has_edge(u, v):
                if g.adj[u] | 1 << u == g.adj[v] | 1 << v:
                    found.append(Twin(u=u, v=v, kind=TwinKind.CLOSED))
            elif g.adj[u] == g.adj[v]:
                found.append(Twin(u=u, v=v, kind=TwinKind.INDEPENDENT))
    return found


def universal_vertices(g: Graph) -> VertexSet:
    full = g.full
    return VertexSet(g.n, sum(1 << v for v, row in enumerate(g.adj) if row == full & ~(1 << v)))


def leaves(g: Graph) -> VertexSet:
    return VertexSet(g.n, sum(1 << v for v, row in enumerate(g.adj) if row.bit_count() == 1))


def _alpha(adj: tuple[int, ...], candidates: int) -> int:
    if not candidates:
        return 0
    low = candidates & -candidates
    v = low.bit_length() - 1
    rest = candidates & ~low
    take = 1 + _alpha(adj, rest & ~adj[v])
    if not adj[v] & rest:
        return take
    return max(take, _alpha(adj, rest))


def independence_number(g: Graph, *, cap: int | None = None) -> int:
    ensure_within_cap(g.n, cap, "independence_number")
    return _alpha(g.adj, g.full)


def dominated_pair_slow_witness(g: Graph) -> DominatedPair | None:
    """First adjacent pair ``(u, v)`` in lexicographic order with ``N[u]`` strictly inside ``N[v]``.

    ``V - {u, v}`` then forces in exactly two rounds under both rules.
    """
    for u in range(g.n):
        closed_u = g.adj[u] | 1 << u
        for v in iter_bits(g.adj[u]):
            closed_v = g.adj[v] | 1 << v
            if closed_u != closed_v and closed_u & ~closed_v == 0:
                slow = g.full & ~(1 << u) & ~(1 << v)
                return DominatedPair(u=u, v=v, slow_set=VertexSet(g.n, slow))
    return None


def z_at_least_n_minus_2_form(g: Graph) -> bool:
    """Complement is ``(disjoint complete and complete bipartite graphs) ∨ K_r``.

    Vertices universal in the complement form the ``K_r``; every component of
    what remains must be complete or complete bipartite.
    """
    h = complement(g)
    universal = universal_vertices(h).bits
    rest = h.full & ~universal
    return all(
        shape_of_component(h.adj, h.n, comp).kind is not ShapeKind.OTHER
        for comp in component_masks(h.adj, rest)
    )


__all__ = [
    "dominated_pair_slow_witness",
    "independence_number",
    "leaves",
    "twins",
    "universal_vertices",
    "z_at_least_n_minus_2_form",
]
