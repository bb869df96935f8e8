"""Induced order-4 pattern search and the slow forcing sets built from it."""

from __future__ import annotations

from collections.abc import Sequence
from itertools import combinations, permutations

from forcing_lab.models.graph import Graph, VertexSet
from forcing_lab.models.verdicts import Pattern, PatternEmbedding, ShapeKind, SlowSetWitness

from .shapes import complement_components, complement_shapes

# Edges on positions (w, x, y, z); for the first three patterns the labels
# match the slow-set construction in ``join_pattern_slow_set``.
PATTERN_EDGES: dict[Pattern, frozenset[tuple[int, int]]] = {
    Pattern.P4: frozenset({(0, 1), (1, 2), (2, 3)}),
    Pattern.P3_K1: frozenset({(0, 1), (1, 2)}),
    Pattern.K2_2K1: frozenset({(1, 2)}),
    Pattern.PAW: frozenset({(0, 1), (0, 2), (1, 2), (0, 3)}),
    Pattern.DIAMOND: frozenset({(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)}),
}

JOIN_OBSTRUCTIONS: tuple[Pattern, ...] = (Pattern.P4, Pattern.P3_K1, Pattern.K2_2K1)
COMPONENT_OBSTRUCTIONS: tuple[Pattern, ...] = (Pattern.P4, Pattern.PAW, Pattern.DIAMOND)

_PAIRS = tuple(combinations(range(4), 2))


def _adjacency_signature(g: Graph, quad: Sequence[int]) -> frozenset[tuple[int, int]]:
    return frozenset((i, j) for i, j in _PAIRS if g.adj[quad[i]] >> quad[j] & 1)


def _scan(g: Graph, patterns: Sequence[Pattern], within: int | None) -> PatternEmbedding | None:
    pool = range(g.n) if within is None else list(VertexSet(g.n, within))
    for quad in permutations(pool, 4):
        signature = _adjacency_signature(g, quad)
        for pattern in patterns:
            if signature == PATTERN_EDGES[pattern]:
                return PatternEmbedding(pattern=pattern, vertices=quad)
    return None


def forbidden_subgraph_scan(g: Graph, patterns: Sequence[Pattern | str]) -> PatternEmbedding | None:
    """First induced embedding over ordered 4-tuples in lexicographic order."""
    return _scan(g, [Pattern(p) for p in patterns], None)


def is_cograph(g: Graph) -> bool:
    return forbidden_subgraph_scan(g, [Pattern.P4]) is None


def _first_outside(comp: VertexSet) -> int:
    return comp.complement().min()


def join_pattern_slow_set(g: Graph) -> SlowSetWitness | None:
    """For a join holding an induced P4, P3+K1 or K2+2K1 inside one side.

    The four vertices lie in a single complement component; with ``p`` the
    lowest vertex outside it, ``V - {p, y, z}`` is a slow forcing set.
    """
    comps = complement_components(g)
    if len(comps) < 2:
        return None
    for comp in comps:
        if len(comp) < 4:
            continue
        embedding = _scan(g, JOIN_OBSTRUCTIONS, comp.bits)
        if embedding is None:
            continue
        _, _, y, z = embedding.vertices
        p = _first_outside(comp)
        white = g.vertex_set((p, y, z))
        return SlowSetWitness(
            slow_set=white.complement(),
            white=tuple(white),
            embedding=embedding,
        )
    return None


def star_complement_slow_set(g: Graph) -> SlowSetWitness | None:
    """For a join with a complement component ``K_{1,r}`` (r >= 2): ``V - {c, v}``.

    ``c`` is the star centre and ``v`` its second-lowest leaf; the set forces
    in exactly two standard rounds.
    """
    shapes = complement_shapes(g)
    if len(shapes) < 2:
        return None
    for shape in shapes:
        if shape.kind is not ShapeKind.COMPLETE_BIPARTITE:
            continue
        left, right = shape.parts
        if len(left) == 1 and len(right) >= 2:
            centre, leaves = left.min(), right.to_list()
        elif len(right) == 1 and len(left) >= 2:
            centre, leaves = right.min(), left.to_list()
        else:
            continue
        white = g.vertex_set((centre, leaves[1]))
        return SlowSetWitness(slow_set=white.complement(), white=tuple(white))
    return None


def independent_triple_slow_set(g: Graph) -> SlowSetWitness | None:
    """For a join with three independent vertices ``u < v < w`` in one complement component.

    With ``p`` the lowest vertex outside that component, ``V - {p, u, v}``
    forces in at least two PSD rounds.
    """
    comps = complement_components(g)
    if len(comps) < 2:
        return None
    for comp in comps:
        for u, v, w in combinations(comp.to_list(), 3):
            if g.has_edge(u, v) or g.has_edge(u, w) or g.has_edge(v, w):
                continue
            p = _first_outside(comp)
            white = g.vertex_set((p, u, v))
            return SlowSetWitness(slow_set=white.complement(), white=tuple(white))
    return None


__all__ = [
    "COMPONENT_OBSTRUCTIONS",
    "JOIN_OBSTRUCTIONS",
    "PATTERN_EDGES",
    "forbidden_subgraph_scan",
    "independent_triple_slow_set",
    "is_cograph",
    "join_pattern_slow_set",
    "star_complement_slow_set",
]
