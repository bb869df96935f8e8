"""Counterexample check: upper propagation time 1 against the fast-join forms."""

from __future__ import annotations

from collections.abc import Iterable

from forcing_lab.forcing.engine import PreconditionError
from forcing_lab.forcing.search import upper_pt
from forcing_lab.graphs.algebra import is_connected
from forcing_lab.graphs.graph6 import to_graph6
from forcing_lab.models.graph import Graph
from forcing_lab.models.rule import Rule
from forcing_lab.models.verdicts import ConjectureVerdict

from .fast_join import fast_join_verdict

BOTH_RULES: tuple[Rule, ...] = (Rule.PSD, Rule.STANDARD)


def conjecture_check(
    g: Graph,
    rules: Iterable[Rule] = BOTH_RULES,
    *,
    cap: int | None = None,
) -> ConjectureVerdict:
    """A connected graph with upper propagation time 1 must be a fast join of the same rule."""
    if not is_connected(g):
        raise PreconditionError("conjecture_check needs a connected graph.")
    graph6 = to_graph6(g)
    if g.n < 2:
        return ConjectureVerdict(graph6=graph6, order=g.n)

    verdict = fast_join_verdict(g)
    fields: dict[str, object] = {}
    for rule in rules:
        upper = upper_pt(g, rule, cap=cap)
        fast = verdict.is_fast(rule)
        prefix = rule.value
        fields[f"{prefix}_upper_pt"] = upper
        fields[f"{prefix}_fast"] = fast
        fields[f"{prefix}_counterexample"] = upper == 1 and not fast
    return ConjectureVerdict(graph6=graph6, order=g.n, **fields)


__all__ = ["BOTH_RULES", "conjecture_check"]
