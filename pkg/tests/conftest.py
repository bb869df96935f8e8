from __future__ import annotations

import random
from collections.abc import Callable

import networkx as nx
import pytest

from forcing_lab.corpus import atlas_graphs, to_networkx
from forcing_lab.models.graph import Graph
from forcing_lab.models.tree import ConstructionTree


@pytest.fixture(scope="session")
def connected_atlas() -> list[Graph]:
    """Every connected graph of order 1..7, one per isomorphism class."""
    return atlas_graphs(1, 7)


@pytest.fixture(scope="session")
def full_atlas() -> list[Graph]:
    return atlas_graphs(1, 7, connected_only=False)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240611)


@pytest.fixture
def isomorphic() -> Callable[[Graph, Graph], bool]:
    def check(g: Graph, h: Graph) -> bool:
        return nx.is_isomorphic(to_networkx(g), to_networkx(h))

    return check


@pytest.fixture
def paw() -> Graph:
    return Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (0, 3)])


@pytest.fixture
def diamond() -> Graph:
    return Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])


@pytest.fixture
def small_threshold() -> Graph:
    """Two dominating vertices 3 and 4 over the independent set {0, 1, 2}."""
    return Graph.from_edges(5, [(3, 4), (4, 2), (2, 3), (4, 1), (1, 3), (4, 0), (0, 3)])


@pytest.fixture
def small_threshold_tree() -> ConstructionTree:
    leaf = ConstructionTree.leaf
    return ConstructionTree.join(
        ConstructionTree.join(
            ConstructionTree.union(ConstructionTree.union(leaf(0), leaf(1)), leaf(2)),
            leaf(3),
        ),
        leaf(4),
    )


@pytest.fixture
def wheel_tree() -> ConstructionTree:
    """Cograph tree ``((K1 ∪ K1) ∨ (K1 ∪ K1)) ∨ K1``, a relabelled ``W_5``."""
    leaf = ConstructionTree.leaf
    return ConstructionTree.join(
        ConstructionTree.join(
            ConstructionTree.union(leaf(0), leaf(1)),
            ConstructionTree.union(leaf(2), leaf(3)),
        ),
        leaf(4),
    )


@pytest.fixture
def split_cograph() -> Graph:
    """Cograph whose forcing number and upper forcing number differ (4 and 5)."""
    edges = [(0, 1)]
    edges += [(u, v) for u in range(4) for v in (4, 5)]
    edges += [(u, 6) for u in range(6)]
    return Graph.from_edges(7, edges)


@pytest.fixture
def two_triangles() -> Graph:
    """Two triangles bridged by the edges 1-3 and 2-4; minimal sets of sizes 2 and 3."""
    return Graph.from_edges(6, [(0, 1), (1, 2), (2, 0), (1, 3), (3, 5), (5, 4), (4, 3), (2, 4)])
