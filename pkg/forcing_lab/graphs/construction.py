"""Graphs from construction trees, and seeded random builders for cographs and fast joins."""

from __future__ import annotations

import random

from forcing_lab.models.graph import Graph, GraphError
from forcing_lab.models.tree import ConstructionTree, NodeKind

from .algebra import disjoint_union, join, join_all, relabel
from .generators import complete_graph, empty_graph


def from_construction_tree(tree: ConstructionTree) -> Graph:
    """Leaves become ``K_1``; the left-to-right leaf order fixes the vertex labels."""
    if tree.kind is NodeKind.LEAF:
        return empty_graph(1)
    left, right = (from_construction_tree(child) for child in tree.children)
    if tree.kind is NodeKind.UNION:
        return disjoint_union(left, right)
    return join(left, right)


def random_threshold_tree(n: int, rng: random.Random) -> ConstructionTree:
    """Add ``n - 1`` vertices one at a time, each isolated or universal."""
    if n < 1:
        raise GraphError(f"A threshold tree needs at least one leaf, got {n}.")
    tree = ConstructionTree.leaf(0)
    for label in range(1, n):
        leaf = ConstructionTree.leaf(label)
        if rng.random() < 0.5:
            tree = ConstructionTree.union(tree, leaf)
        else:
            tree = ConstructionTree.join(tree, leaf)
    return tree


def random_cograph_tree(n: int, rng: random.Random) -> ConstructionTree:
    if n < 1:
        raise GraphError(f"A cograph tree needs at least one leaf, got {n}.")
    labels = iter(range(n))

    def build(size: int) -> ConstructionTree:
        if size == 1:
            return ConstructionTree.leaf(next(labels))
        split = rng.randint(1, size - 1)
        left = build(split)
        right = build(size - split)
        if rng.random() < 0.5:
            return ConstructionTree.union(left, right)
        return ConstructionTree.join(left, right)

    return build(n)


def random_psd_fast_join(order: int, rng: random.Random) -> Graph:
    """Join of at least two factors ``K_p ∪ K_q`` (p, q >= 1), randomly relabelled."""
    factors = []
    for size in _random_parts(order, 2, rng):
        p = rng.randint(1, size - 1)
        factors.append(disjoint_union(complete_graph(p), complete_graph(size - p)))
    return _shuffled(join_all(factors), rng)


def random_standard_fast_join(order: int, rng: random.Random) -> Graph:
    """Join of at least two factors, each ``sK_1`` (s >= 2) or ``K_p ∪ K_q`` (p, q >= 2)."""
    factors = []
    for size in _random_parts(order, 2, rng):
        if size >= 4 and rng.random() < 0.5:
            p = rng.randint(2, size - 2)
            factors.append(disjoint_union(complete_graph(p), complete_graph(size - p)))
        else:
            factors.append(empty_graph(size))
    return _shuffled(join_all(factors), rng)


def _random_parts(total: int, minimum: int, rng: random.Random) -> list[int]:
    if total < 2 * minimum:
        raise GraphError(f"Order {total} is too small for two factors of size >= {minimum}.")
    count = rng.randint(2, total // minimum)
    parts = [minimum] * count
    for _ in range(total - minimum * count):
        parts[rng.randrange(count)] += 1
    return parts


def _shuffled(g: Graph, rng: random.Random) -> Graph:
    mapping = list(range(g.n))
    rng.shuffle(mapping)
    return relabel(g, mapping)


__all__ = [
    "from_construction_tree",
    "random_cograph_tree",
    "random_psd_fast_join",
    "random_standard_fast_join",
    "random_threshold_tree",
]
