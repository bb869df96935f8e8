"""Deterministically labelled graph families."""

from __future__ import annotations

from collections.abc import Callable

from forcing_lab.models.family import FamilyName, FamilySpec
from forcing_lab.models.graph import Graph, GraphError, VertexSet, full_mask

from .algebra import join


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"A cycle needs at least 3 vertices, got {n}.")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def complete_graph(n: int) -> Graph:
    full = full_mask(n)
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def empty_graph(n: int) -> Graph:
    return Graph.empty(n)


def complete_bipartite_graph(n: int, m: int) -> Graph:
    """Sides ``0..n-1`` and ``n..n+m-1``."""
    left = full_mask(n)
    right = full_mask(m) << n
    return Graph(n + m, (right,) * n + (left,) * m)


def star_graph(n: int) -> Graph:
    """``K_{1,n-1}`` with the centre labelled ``n - 1``."""
    if n < 2:
        raise GraphError(f"A star needs at least 2 vertices, got {n}.")
    centre = n - 1
    return Graph.from_edges(n, ((leaf, centre) for leaf in range(centre)))


def wheel_graph(n: int) -> Graph:
    """Cycle on ``0..n-2`` plus the hub ``n - 1``."""
    if n < 4:
        raise GraphError(f"A wheel needs at least 4 vertices, got {n}.")
    return join(cycle_graph(n - 1), empty_graph(1))


def sgap_graph(k: int) -> Graph:
    """``P_{8+2k}`` joined with ``(7+2k)K_1``; the path occupies ``0..7+2k`` in path order."""
    if k < 0:
        raise GraphError(f"sgap requires k >= 0, got {k}.")
    return join(path_graph(8 + 2 * k), empty_graph(7 + 2 * k))


def sgap_parts(k: int) -> tuple[VertexSet, VertexSet]:
    """Path part ``A`` and independent part ``B`` of ``sgap_graph(k)``."""
    path_order = 8 + 2 * k
    n = 15 + 4 * k
    a = VertexSet(n, full_mask(path_order))
    return a, a.complement()


_BUILDERS: dict[FamilyName, Callable[[FamilySpec], Graph]] = {
    FamilyName.PATH: lambda spec: path_graph(spec.n),
    FamilyName.CYCLE: lambda spec: cycle_graph(spec.n),
    FamilyName.COMPLETE: lambda spec: complete_graph(spec.n),
    FamilyName.COMPLETE_BIPARTITE: lambda spec: complete_bipartite_graph(spec.n, spec.m),
    FamilyName.STAR: lambda spec: star_graph(spec.n),
    FamilyName.WHEEL: lambda spec: wheel_graph(spec.n),
    FamilyName.EMPTY: lambda spec: empty_graph(spec.n),
    FamilyName.SGAP: lambda spec: sgap_graph(spec.k),
}


def generate(spec: FamilySpec) -> Graph:
    return _BUILDERS[spec.family](spec)


__all__ = [
    "complete_bipartite_graph",
    "complete_graph",
    "cycle_graph",
    "empty_graph",
    "generate",
    "path_graph",
    "sgap_graph",
    "sgap_parts",
    "star_graph",
    "wheel_graph",
]
