"""Complement, union and join algebra plus connectivity helpers."""

from __future__ import annotations

from collections.abc import Iterable, Sequence

from forcing_lab.models.graph import MAX_VERTICES, Graph, GraphError, VertexSet, full_mask, iter_bits


def complement(g: Graph) -> Graph:
    full = g.full
    return Graph(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj)))


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """Place ``g2`` after ``g1``; its vertex ``v`` becomes ``g1.n + v``."""
    _check_combined_order(g1, g2)
    shift = g1.n
    return Graph(g1.n + g2.n, g1.adj + tuple(row << shift for row in g2.adj))


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus every edge between the two sides."""
    _check_combined_order(g1, g2)
    shift = g1.n
    right = full_mask(g2.n) << shift
    left = full_mask(g1.n)
    rows = tuple(row | right for row in g1.adj) + tuple((row << shift) | left for row in g2.adj)
    return Graph(g1.n + g2.n, rows)


def join_all(graphs: Iterable[Graph]) -> Graph:
    result: Graph | None = None
    for g in graphs:
        result = g if result is None else join(result, g)
    if result is None:
        raise GraphError("join_all needs at least one graph.")
    return result


def component_masks(adj: Sequence[int], within: int) -> list[int]:
    """Components of the subgraph induced by ``within``, as bitsets ordered by lowest vertex."""
    found: list[int] = []
    remaining = within
    while remaining:
        seed = remaining & -remaining
        comp = seed
        frontier = seed
        while frontier:
            reach = 0
            for v in iter_bits(frontier):
                reach |= adj[v]
            frontier = reach & remaining & ~comp
            comp |= frontier
        found.append(comp)
        remaining &= ~comp
    return found


def components(g: Graph) -> list[VertexSet]:
    return [VertexSet(g.n, mask) for mask in component_masks(g.adj, g.full)]


def is_connected(g: Graph) -> bool:
    """True for exactly one component; the order-0 graph counts as connected."""
    return len(component_masks(g.adj, g.full)) <= 1


def is_connected_within(g: Graph, s: VertexSet) -> bool:
    """Connectivity of ``g[s]``; the empty set counts as connected."""
    return len(component_masks(g.adj, s.bits)) <= 1


def induced_subgraph(g: Graph, s: VertexSet) -> Graph:
    """``g[s]`` relabelled ``0..|s|-1`` in increasing vertex order."""
    kept = s.to_list()
    position = {v: i for i, v in enumerate(kept)}
    rows = []
    for v in kept:
        row = 0
        for u in iter_bits(g.adj[v] & s.bits):
            row |= 1 << position[u]
        rows.append(row)
    return Graph(len(kept), tuple(rows))


def relabel(g: Graph, mapping: Sequence[int]) -> Graph:
    """Rename vertex ``v`` to ``mapping[v]``; ``mapping`` must be a permutation of ``0..n-1``."""
    if sorted(mapping) != list(range(g.n)):
        raise GraphError("relabel needs a permutation of the vertex range.")
    rows = [0] * g.n
    for v, row in enumerate(g.adj):
        for u in iter_bits(row):
            rows[mapping[v]] |= 1 << mapping[u]
    return Graph(g.n, tuple(rows))


def _check_combined_order(g1: Graph, g2: Graph) -> None:
    if g1.n + g2.n > MAX_VERTICES:
        raise GraphError(
            f"Combined order {g1.n + g2.n} exceeds the supported maximum of {MAX_VERTICES}."
        )


__all__ = [
    "complement",
    "component_masks",
    "components",
    "disjoint_union",
    "induced_subgraph",
    "is_connected",
    "is_connected_within",
    "join",
    "join_all",
    "relabel",
]
