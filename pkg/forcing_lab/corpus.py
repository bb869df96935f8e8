"""Small-graph corpus access through the networkx graph atlas."""

from __future__ import annotations

from functools import lru_cache

import networkx as nx

from forcing_lab.graphs.algebra import is_connected
from forcing_lab.models.graph import Graph

ATLAS_MAX_ORDER = 7


def from_networkx(graph: nx.Graph) -> Graph:
    """Convert a networkx graph; nodes are relabelled ``0..n-1`` in sorted order."""
    nodes = sorted(graph.nodes())
    index = {node: i for i, node in enumerate(nodes)}
    return Graph.from_edges(len(nodes), ((index[u], index[v]) for u, v in graph.edges()))


def to_networkx(g: Graph) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(range(g.n))
    graph.add_edges_from(g.edges())
    return graph


@lru_cache(maxsize=1)
def _atlas() -> tuple[Graph, ...]:
    return tuple(from_networkx(graph) for graph in nx.graph_atlas_g())


def atlas_graphs(
    min_order: int = 1,
    max_order: int = ATLAS_MAX_ORDER,
    *,
    connected_only: bool = True,
) -> list[Graph]:
    """Every graph of order ``min_order..max_order`` up to isomorphism, in atlas order."""
    if max_order > ATLAS_MAX_ORDER:
        raise ValueError(f"The graph atlas stops at order {ATLAS_MAX_ORDER}, got {max_order}.")
    return [
        g
        for g in _atlas()
        if min_order <= g.n <= max_order and (not connected_only or is_connected(g))
    ]


__all__ = ["ATLAS_MAX_ORDER", "atlas_graphs", "from_networkx", "to_networkx"]
