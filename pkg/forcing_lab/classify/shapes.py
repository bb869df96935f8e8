"""Component shape tests: complete, complete bipartite, or other."""

from __future__ import annotations

from collections.abc import Sequence

from forcing_lab.graphs.algebra import complement, component_masks
from forcing_lab.models.graph import Graph, VertexSet, iter_bits
from forcing_lab.models.verdicts import ComponentShape, ShapeKind


def shape_of_component(adj: Sequence[int], n: int, comp: int) -> ComponentShape:
    """Shape of the connected vertex set ``comp``; ``K_1`` and ``K_2`` count as complete."""
    vertices = VertexSet(n, comp)
    if all(adj[v] & comp == comp & ~(1 << v) for v in iter_bits(comp)):
        return ComponentShape(vertices=vertices, kind=ShapeKind.COMPLETE)

    anchor = comp & -comp
    a_side = anchor.bit_length() - 1
    right = adj[a_side] & comp
    left = comp & ~right
    bipartite = all(adj[v] & comp == right for v in iter_bits(left)) and all(
        adj[v] & comp == left for v in iter_bits(right)
    )
    if bipartite:
        return ComponentShape(
            vertices=vertices,
            kind=ShapeKind.COMPLETE_BIPARTITE,
            parts=(VertexSet(n, left), VertexSet(n, right)),
        )
    return ComponentShape(vertices=vertices, kind=ShapeKind.OTHER)


def classify_component_shape(g: Graph) -> list[ComponentShape]:
    """One shape per component of ``g``, ordered by lowest vertex."""
    return [shape_of_component(g.adj, g.n, comp) for comp in component_masks(g.adj, g.full)]


def complement_components(g: Graph) -> list[VertexSet]:
    h = complement(g)
    return [VertexSet(g.n, comp) for comp in component_masks(h.adj, h.full)]


def complement_shapes(g: Graph) -> list[ComponentShape]:
    return classify_component_shape(complement(g))


def is_join(g: Graph) -> bool:
    """``g`` splits as a join of two graphs exactly when its complement is disconnected."""
    return len(complement_components(g)) >= 2


__all__ = [
    "classify_component_shape",
    "complement_components",
    "complement_shapes",
    "is_join",
    "shape_of_component",
]
