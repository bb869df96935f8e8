from __future__ import annotations

import pytest

from forcing_lab.forcing.engine import (
    PreconditionError,
    forced_in_round,
    is_forcing_set,
    is_slow_forcing_set,
    propagate,
    propagation_time,
    psd_reduce_set,
    step,
)
from forcing_lab.forcing.search import enumerate_forcing_families
from forcing_lab.graphs.algebra import is_connected_within
from forcing_lab.graphs.generators import complete_graph, path_graph, sgap_graph, sgap_parts, star_graph, wheel_graph
from forcing_lab.models.graph import GraphError, VertexSet
from forcing_lab.models.rule import Rule


def test_wheel_sets_with_different_times() -> None:
    g = wheel_graph(5)

    assert propagation_time(g, g.vertex_set([0, 1, 4]), Rule.STANDARD) == 1
    assert propagation_time(g, g.vertex_set([0, 1, 2]), Rule.STANDARD) == 2
    assert step(g, g.vertex_set([0, 1, 2]), Rule.STANDARD).to_list() == [4]


def test_path_endpoint_needs_n_minus_one_rounds() -> None:
    for n in range(2, 11):
        g = path_graph(n)
        assert propagation_time(g, g.vertex_set([0]), Rule.STANDARD) == n - 1


def test_psd_rule_forces_into_each_white_component() -> None:
    star = star_graph(4)
    centre = star.vertex_set([3])

    assert propagation_time(star, centre, Rule.STANDARD) is None
    assert propagation_time(star, centre, Rule.PSD) == 1

    path = path_graph(4)
    assert forced_in_round(path, path.vertex_set([1]), Rule.STANDARD) == []
    assert forced_in_round(path, path.vertex_set([1]), Rule.PSD) == [(1, 0), (1, 2)]


def test_psd_step_from_the_path_side_of_sgap_forces_the_independent_side() -> None:
    g = sgap_graph(0)
    a, b = sgap_parts(0)

    assert step(g, a, Rule.PSD) == b


def test_propagate_records_rounds_closures_and_forces() -> None:
    g = path_graph(4)

    record = propagate(g, g.vertex_set([0]), Rule.STANDARD)

    assert record.time == 3
    assert record.is_forcing
    assert [r.to_list() for r in record.rounds] == [[1], [2], [3]]
    assert [c.to_list() for c in record.closures] == [[0], [0, 1], [0, 1, 2], [0, 1, 2, 3]]
    assert record.forces == (((0, 1),), ((1, 2),), ((2, 3),))
    assert record.final_closure == g.vertices()


def test_propagate_stalls_with_a_partial_closure() -> None:
    g = complete_graph(3)

    record = propagate(g, g.vertex_set([0]), Rule.STANDARD)

    assert record.time is None
    assert not record.is_forcing
    assert record.rounds == ()
    assert record.final_closure.to_list() == [0]


def test_full_set_forces_in_zero_rounds() -> None:
    g = wheel_graph(5)

    for rule in Rule:
        assert propagation_time(g, g.vertices(), rule) == 0
        assert is_forcing_set(g, g.vertices(), rule)
        assert not is_slow_forcing_set(g, g.vertices(), rule)


def test_slow_forcing_set_needs_two_rounds() -> None:
    g = wheel_graph(5)

    assert is_slow_forcing_set(g, g.vertex_set([0, 1, 2]), Rule.STANDARD)
    assert not is_slow_forcing_set(g, g.vertex_set([0, 1, 4]), Rule.STANDARD)
    assert not is_slow_forcing_set(g, g.vertex_set([0]), Rule.STANDARD)


def test_engine_rejects_sets_of_the_wrong_width() -> None:
    with pytest.raises(GraphError):
        propagation_time(path_graph(3), VertexSet.of(4, [0]), Rule.STANDARD)


# ---- PSD reduction


def test_psd_reduce_shortens_the_sgap_path_walk() -> None:
    g = sgap_graph(0)
    _, b = sgap_parts(0)
    start = b.with_vertex(0)

    reduced = psd_reduce_set(g, start)

    assert propagation_time(g, start, Rule.PSD) == 7
    assert reduced == b.with_vertex(1)
    assert propagation_time(g, reduced, Rule.PSD) == 6


@pytest.mark.parametrize(
    ("graph", "vertices"),
    [
        (complete_graph(2), []),
        (path_graph(3), [0, 1, 2]),
        (path_graph(3), [1]),
    ],
    ids=["not-forcing", "zero-time", "disconnected-remainder"],
)
def test_psd_reduce_checks_its_preconditions(graph, vertices) -> None:
    with pytest.raises(PreconditionError):
        psd_reduce_set(graph, graph.vertex_set(vertices))


@pytest.mark.slow
def test_psd_reduce_drops_one_round_on_small_connected_graphs(connected_atlas) -> None:
    for g in connected_atlas:
        if g.n > 6:
            continue
        for mask in range(1 << g.n):
            b = VertexSet(g.n, mask)
            time = propagation_time(g, b, Rule.PSD)
            if time is None or time < 2 or not is_connected_within(g, b.complement()):
                continue
            reduced = psd_reduce_set(g, b)
            assert len(reduced) == len(b)
            assert propagation_time(g, reduced, Rule.PSD) == time - 1


@pytest.mark.slow
def test_psd_reduce_on_minimum_sets_of_order_seven(connected_atlas) -> None:
    reduced_any = False
    for g in connected_atlas:
        if g.n != 7:
            continue
        minimum, _ = enumerate_forcing_families(g, Rule.PSD)
        for b in minimum.sets:
            time = propagation_time(g, b, Rule.PSD)
            if time < 2 or not is_connected_within(g, b.complement()):
                continue
            reduced_any = True
            assert propagation_time(g, psd_reduce_set(g, b), Rule.PSD) == time - 1, g.edges()
    assert reduced_any


# ---- Rule dominance


def test_standard_round_is_contained_in_the_psd_round(connected_atlas) -> None:
    for g in connected_atlas:
        if g.n > 6:
            continue
        for mask in range(1 << g.n):
            blue = VertexSet(g.n, mask)
            assert step(g, blue, Rule.STANDARD).issubset(step(g, blue, Rule.PSD)), (g.edges(), mask)
