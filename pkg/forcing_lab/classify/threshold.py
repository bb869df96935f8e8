"""Threshold graph recognition by peeling isolated and universal vertices."""

from __future__ import annotations

from forcing_lab.models.graph import Graph, iter_bits
from forcing_lab.models.tree import ConstructionTree


def threshold_construction_tree(g: Graph) -> ConstructionTree | None:
    """Construction tree witnessing that ``g`` is threshold, or ``None``.

    Repeatedly removes the lowest vertex that is isolated or universal in the
    remaining graph. Leaf labels are the original vertex indices.
    """
    if g.n == 0:
        return None
    remaining = g.full
    peeled: list[tuple[int, bool]] = []
    while remaining & (remaining - 1):
        for v in iter_bits(remaining):
            row = g.adj[v] & remaining
            if not row:
                peeled.append((v, False))
                break
            if row == remaining & ~(1 << v):
                peeled.append((v, True))
                break
        else:
            return None
        remaining &= ~(1 << v)

    tree = ConstructionTree.leaf(remaining.bit_length() - 1)
    for v, universal in reversed(peeled):
        leaf = ConstructionTree.leaf(v)
        tree = ConstructionTree.join(tree, leaf) if universal else ConstructionTree.union(tree, leaf)
    return tree


def is_threshold(g: Graph) -> bool:
    """The order-0 graph counts as threshold."""
    return g.n == 0 or threshold_construction_tree(g) is not None


__all__ = ["is_threshold", "threshold_construction_tree"]
