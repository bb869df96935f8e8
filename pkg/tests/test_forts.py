from __future__ import annotations

import pytest

from forcing_lab.classify.structure import twins
from forcing_lab.config import OrderCapExceededError
from forcing_lab.forcing.engine import is_forcing_set
from forcing_lab.forcing.forts import (
    enumerate_forts,
    hits_all_forts,
    is_fort,
    is_psd_fort,
    is_standard_fort,
    minimum_fort_transversal_size,
)
from forcing_lab.forcing.search import forcing_number
from forcing_lab.graphs.generators import cycle_graph, path_graph, star_graph
from forcing_lab.models.graph import VertexSet
from forcing_lab.models.rule import Rule
from forcing_lab.models.verdicts import TwinKind


def test_path_forts_differ_between_rules() -> None:
    g = path_graph(3)
    ends = g.vertex_set([0, 2])

    assert is_standard_fort(g, ends)
    assert not is_psd_fort(g, ends)
    assert is_psd_fort(g, g.vertices())
    assert not is_fort(g, VertexSet.empty(3), Rule.STANDARD)


def test_enumerate_minimal_forts_of_small_graphs() -> None:
    p3 = path_graph(3)

    assert [f.to_list() for f in enumerate_forts(p3, Rule.STANDARD, True).forts] == [[0, 2]]
    assert [f.to_list() for f in enumerate_forts(p3, Rule.PSD, True).forts] == [[0, 1, 2]]

    star = star_graph(4)
    minimal = enumerate_forts(star, Rule.STANDARD, minimal_only=True)
    assert minimal.minimal_only
    assert [f.to_list() for f in minimal.forts] == [[0, 1], [0, 2], [1, 2]]


def test_all_forts_are_ordered_by_size_then_members() -> None:
    family = enumerate_forts(cycle_graph(4), Rule.STANDARD)

    keys = [f.sort_key() for f in family.forts]
    assert keys == sorted(keys)
    assert all(is_standard_fort(cycle_graph(4), f) for f in family.forts)
    assert family.forts[-1] == cycle_graph(4).vertices()


@pytest.mark.parametrize("rule", list(Rule), ids=[r.value for r in Rule])
def test_hitting_every_fort_is_equivalent_to_forcing(connected_atlas, rule: Rule) -> None:
    for g in connected_atlas:
        if g.n > 5:
            continue
        for mask in range(1 << g.n):
            b = VertexSet(g.n, mask)
            assert hits_all_forts(g, b, rule) == is_forcing_set(g, b, rule)


@pytest.mark.parametrize("rule", list(Rule), ids=[r.value for r in Rule])
def test_minimum_fort_transversal_is_the_forcing_number(connected_atlas, rule: Rule) -> None:
    for g in connected_atlas:
        if g.n > 6:
            continue
        assert minimum_fort_transversal_size(g, rule) == forcing_number(g, rule)


def test_fort_enumeration_respects_the_order_cap() -> None:
    with pytest.raises(OrderCapExceededError):
        enumerate_forts(path_graph(8), Rule.STANDARD, cap=6)


@pytest.mark.slow
@pytest.mark.parametrize("rule", list(Rule), ids=[r.value for r in Rule])
def test_fort_oracle_on_orders_six_and_seven(connected_atlas, rule: Rule) -> None:
    for g in connected_atlas:
        if g.n < 6:
            continue
        for mask in range(1 << g.n):
            b = VertexSet(g.n, mask)
            assert hits_all_forts(g, b, rule) == is_forcing_set(g, b, rule), (g.edges(), mask)
        assert minimum_fort_transversal_size(g, rule) == forcing_number(g, rule)


def test_twin_pairs_are_forts(full_atlas) -> None:
    seen = set()
    for g in full_atlas:
        if g.n > 6:
            continue
        for twin in twins(g):
            pair = g.vertex_set([twin.u, twin.v])
            seen.add(twin.kind)
            assert is_standard_fort(g, pair), (g.edges(), twin)
            if twin.kind is TwinKind.CLOSED:
                assert is_psd_fort(g, pair), (g.edges(), twin)
    assert seen == {TwinKind.CLOSED, TwinKind.INDEPENDENT}
