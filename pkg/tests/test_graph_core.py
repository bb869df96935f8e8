from __future__ import annotations

import random

import networkx as nx
import pytest

from forcing_lab.classify.threshold import is_threshold
from forcing_lab.corpus import from_networkx, to_networkx
from forcing_lab.graphs.algebra import (
    complement,
    components,
    disjoint_union,
    induced_subgraph,
    is_connected,
    is_connected_within,
    join,
    relabel,
)
from forcing_lab.graphs.construction import (
    from_construction_tree,
    random_cograph_tree,
    random_threshold_tree,
)
from forcing_lab.graphs.generators import (
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    empty_graph,
    generate,
    path_graph,
    sgap_graph,
    sgap_parts,
    star_graph,
    wheel_graph,
)
from forcing_lab.graphs.graph6 import Graph6Error, from_graph6, iter_graph6_lines, load_graph6_path, to_graph6
from forcing_lab.models.family import FamilySpec
from forcing_lab.models.graph import Graph, GraphError, VertexSet
from forcing_lab.models.tree import ConstructionTree, NodeKind


# ---- VertexSet


def test_vertex_set_algebra_stays_within_width() -> None:
    a = VertexSet.of(6, [0, 2, 4])
    b = VertexSet.of(6, [2, 3])

    assert (a | b).to_list() == [0, 2, 3, 4]
    assert (a & b).to_list() == [2]
    assert (a - b).to_list() == [0, 4]
    assert a.complement().to_list() == [1, 3, 5]
    assert len(a) == 3 and 4 in a and 5 not in a
    assert a.with_vertex(5).without_vertex(0).to_list() == [2, 4, 5]
    assert VertexSet.of(6, [2]).issubset(a)
    assert a.min() == 0


def test_vertex_set_rejects_out_of_range_members() -> None:
    with pytest.raises(GraphError):
        VertexSet.of(3, [3])
    with pytest.raises(GraphError):
        VertexSet(3, 0b1000)
    with pytest.raises(GraphError):
        VertexSet.of(3, [0]) | VertexSet.of(4, [0])
    with pytest.raises(GraphError):
        VertexSet.empty(2).min()


def test_vertex_set_sort_key_orders_by_size_then_members() -> None:
    sets = [VertexSet.of(5, s) for s in ([1, 2], [4], [0, 3], [0, 1, 2])]

    ordered = sorted(sets, key=VertexSet.sort_key)

    assert [s.to_list() for s in ordered] == [[4], [0, 3], [1, 2], [0, 1, 2]]


# ---- Graph


def test_graph_rejects_loops_and_asymmetric_rows() -> None:
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(1, 1)])
    with pytest.raises(GraphError):
        Graph(2, (0b10, 0))
    with pytest.raises(GraphError):
        Graph(2, (0,))
    with pytest.raises(GraphError):
        Graph.from_edges(2, [(0, 2)])


def test_graph_accessors() -> None:
    g = path_graph(4)

    assert g.size == 3
    assert g.edges() == [(0, 1), (1, 2), (2, 3)]
    assert g.degrees() == (1, 2, 2, 1)
    assert g.neighbors(1).to_list() == [0, 2]
    assert g.closed_neighborhood(1).to_list() == [0, 1, 2]
    assert g.has_edge(2, 3) and not g.has_edge(0, 3)


# ---- graph6


@pytest.mark.parametrize(
    ("text", "expected"),
    [
        ("@", Graph.empty(1)),
        ("A_", complete_graph(2)),
        ("A?", Graph.empty(2)),
        ("D?{", star_graph(5)),
    ],
    ids=["k1", "k2", "2k1", "star-centre-last"],
)
def test_from_graph6_decodes_known_strings(text: str, expected: Graph) -> None:
    assert from_graph6(text) == expected
    assert to_graph6(expected) == text


def test_graph6_round_trips_the_long_size_form() -> None:
    g = cycle_graph(63)

    text = to_graph6(g)

    assert text.startswith("~")
    assert from_graph6(text) == g
    assert text == _networkx_graph6(g)


def _networkx_graph6(g: Graph) -> str:
    return nx.to_graph6_bytes(to_networkx(g), header=False).decode("ascii").strip()


def test_graph6_matches_networkx_on_every_small_graph(full_atlas) -> None:
    for g in full_atlas:
        text = to_graph6(g)

        assert from_graph6(text) == g
        assert text == _networkx_graph6(g)
        assert from_networkx(nx.from_graph6_bytes(text.encode("ascii"))) == g


@pytest.mark.parametrize(
    "text",
    ["", "D?", "D?{{", "A`", "A\x7f", "~???"],
    ids=["empty", "short-body", "long-body", "padding-bits", "bad-char", "short-form-in-long-prefix"],
)
def test_from_graph6_rejects_malformed_text(text: str) -> None:
    with pytest.raises(Graph6Error):
        from_graph6(text)


def test_iter_graph6_lines_skips_headers_and_blanks() -> None:
    lines = [">>graph6<<", "@", "", "  A_  "]

    assert list(iter_graph6_lines(lines)) == [(2, "@"), (4, "A_")]


def test_load_graph6_path_reads_every_graph(tmp_path) -> None:
    path = tmp_path / "small.g6"
    path.write_text("@\nA_\n\nD?{\n", encoding="ascii")

    graphs = load_graph6_path(path)

    assert [g.n for g in graphs] == [1, 2, 5]


# ---- Algebra


def test_complement_of_path_on_four_vertices_is_a_path() -> None:
    h = complement(path_graph(4))

    assert sorted(h.edges()) == [(0, 2), (0, 3), (1, 3)]
    assert complement(h) == path_graph(4)


def test_union_and_join_shift_the_second_graph() -> None:
    u = disjoint_union(complete_graph(2), empty_graph(2))
    j = join(complete_graph(2), empty_graph(2))

    assert u.edges() == [(0, 1)]
    assert j.edges() == [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]


def _random_graph(n: int, rng: random.Random) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5])


def test_complement_is_an_involution(full_atlas) -> None:
    for g in full_atlas:
        h = complement(g)

        assert complement(h) == g
        assert h.size == g.n * (g.n - 1) // 2 - g.size


def test_complement_swaps_join_and_union(rng) -> None:
    for _ in range(200):
        g1 = _random_graph(rng.randint(1, 6), rng)
        g2 = _random_graph(rng.randint(1, 6), rng)

        assert complement(join(g1, g2)) == disjoint_union(complement(g1), complement(g2))
        assert complement(disjoint_union(g1, g2)) == join(complement(g1), complement(g2))


def test_join_rejects_orders_above_the_width_limit() -> None:
    with pytest.raises(GraphError):
        join(empty_graph(40), empty_graph(30))


def test_connectivity_helpers() -> None:
    g = disjoint_union(path_graph(3), complete_graph(2))

    assert [c.to_list() for c in components(g)] == [[0, 1, 2], [3, 4]]
    assert not is_connected(g)
    assert is_connected(Graph.empty(0))
    assert is_connected_within(g, g.vertex_set([0, 1]))
    assert not is_connected_within(g, g.vertex_set([0, 2]))
    assert is_connected_within(g, VertexSet.empty(5))


def test_induced_subgraph_relabels_in_vertex_order() -> None:
    g = cycle_graph(5)

    h = induced_subgraph(g, g.vertex_set([0, 1, 2, 4]))

    assert h == Graph.from_edges(4, [(0, 1), (1, 2), (0, 3)])


def test_relabel_requires_a_permutation() -> None:
    g = path_graph(3)

    assert relabel(g, [2, 1, 0]) == g
    with pytest.raises(GraphError):
        relabel(g, [0, 0, 1])


# ---- Generators


def test_generators_use_documented_labels() -> None:
    assert path_graph(4).edges() == [(0, 1), (1, 2), (2, 3)]
    assert (0, 4) in cycle_graph(5).edges()
    assert star_graph(4).neighbors(3).to_list() == [0, 1, 2]
    assert complete_bipartite_graph(2, 3).edges() == [
        (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4),
    ]
    wheel = wheel_graph(5)
    assert wheel.neighbors(4).to_list() == [0, 1, 2, 3]
    assert wheel.size == 8


@pytest.mark.parametrize("k", [0, 1, 2], ids=["k0", "k1", "k2"])
def test_sgap_graph_layout(k: int) -> None:
    g = sgap_graph(k)
    a, b = sgap_parts(k)

    assert g.n == 15 + 4 * k
    assert len(a) == 8 + 2 * k and len(b) == 7 + 2 * k
    assert all(g.has_edge(v, v + 1) for v in range(len(a) - 1))
    assert all(not g.has_edge(u, v) for u in b for v in b if u != v)
    assert all(g.has_edge(u, v) for u in a for v in b)


def test_generate_dispatches_family_specs() -> None:
    assert generate(FamilySpec(family="wheel", n=6)) == wheel_graph(6)
    assert generate(FamilySpec(family="complete_bipartite", n=2, m=2)).edges() == [(0, 2), (0, 3), (1, 2), (1, 3)]
    assert generate(FamilySpec(family="sgap", k=0)) == sgap_graph(0)


@pytest.mark.parametrize(
    "payload",
    [{"family": "cycle", "n": 2}, {"family": "complete_bipartite", "n": 2}, {"family": "sgap"}],
    ids=["cycle-too-small", "bipartite-missing-m", "sgap-missing-k"],
)
def test_family_spec_rejects_incomplete_parameters(payload: dict) -> None:
    with pytest.raises(ValueError):
        generate(FamilySpec(**payload))


# ---- Construction trees


def test_construction_tree_fixes_labels_by_leaf_order(small_threshold, small_threshold_tree) -> None:
    assert small_threshold_tree.is_threshold_tree
    assert [leaf.label for leaf in small_threshold_tree.leaves()] == [0, 1, 2, 3, 4]
    assert from_construction_tree(small_threshold_tree) == small_threshold


def test_cograph_tree_builds_the_wheel(wheel_tree, isomorphic) -> None:
    assert not wheel_tree.is_threshold_tree
    assert isomorphic(from_construction_tree(wheel_tree), wheel_graph(5))


def test_construction_tree_rejects_bad_arity() -> None:
    with pytest.raises(ValueError):
        ConstructionTree(kind=NodeKind.JOIN, children=(ConstructionTree.leaf(0),))


def test_random_threshold_trees_build_threshold_graphs() -> None:
    rng = random.Random(7)
    for n in range(1, 11):
        tree = random_threshold_tree(n, rng)
        g = from_construction_tree(tree)
        assert tree.is_threshold_tree
        assert g.n == n
        assert is_threshold(g)


def test_random_cograph_tree_has_the_requested_order() -> None:
    rng = random.Random(3)
    tree = random_cograph_tree(9, rng)

    assert sorted(leaf.label for leaf in tree.leaves()) == list(range(9))
    assert from_construction_tree(tree).n == 9
