"""Structural PSD and standard fast-join recognition from complement components.

No forcing computation happens here, so the verdicts can be compared against
the exhaustive search independently.
"""

from __future__ import annotations

from collections.abc import Callable

from forcing_lab.forcing.engine import PreconditionError
from forcing_lab.models.graph import Graph
from forcing_lab.models.rule import Rule
from forcing_lab.models.verdicts import ComponentShape, FastJoinVerdict, ShapeKind

from .shapes import complement_shapes


def _psd_factor_ok(shape: ComponentShape) -> bool:
    # K_2 in the complement is K_{1,1}.
    if shape.kind is ShapeKind.COMPLETE:
        return shape.order == 2
    return shape.kind is ShapeKind.COMPLETE_BIPARTITE


def _standard_factor_ok(shape: ComponentShape) -> bool:
    if shape.kind is ShapeKind.COMPLETE:
        return shape.order >= 2
    if shape.kind is ShapeKind.COMPLETE_BIPARTITE:
        return min(shape.part_sizes) >= 2
    return False


def _first_failure(
    shapes: list[ComponentShape],
    accept: Callable[[ComponentShape], bool],
    label: str,
) -> str | None:
    if len(shapes) < 2:
        return "complement is connected and the graph is not complete"
    for shape in shapes:
        if not accept(shape):
            return f"complement component {shape.vertices.to_list()} is not a {label} factor"
    return None


def fast_join_verdict(g: Graph) -> FastJoinVerdict:
    if g.n < 2:
        raise PreconditionError(f"Fast joins are defined for order >= 2, got {g.n}.")
    shapes = complement_shapes(g)
    complete = len(shapes) == g.n
    if complete:
        return FastJoinVerdict(
            psd_fast=True,
            standard_fast=True,
            complete=True,
            components=tuple(shapes),
        )
    psd_reason = _first_failure(shapes, _psd_factor_ok, "PSD fast-join")
    standard_reason = _first_failure(shapes, _standard_factor_ok, "standard fast-join")
    return FastJoinVerdict(
        psd_fast=psd_reason is None,
        standard_fast=standard_reason is None,
        complete=False,
        components=tuple(shapes),
        psd_reason=psd_reason,
        standard_reason=standard_reason,
    )


def is_psd_fast_join(g: Graph) -> FastJoinVerdict:
    """Verdict scoped to the PSD rule: ``.fast`` and ``.reason`` answer for PSD."""
    return fast_join_verdict(g).for_rule(Rule.PSD)


def is_standard_fast_join(g: Graph) -> FastJoinVerdict:
    """Verdict scoped to the standard rule."""
    return fast_join_verdict(g).for_rule(Rule.STANDARD)


__all__ = ["fast_join_verdict", "is_psd_fast_join", "is_standard_fast_join"]
