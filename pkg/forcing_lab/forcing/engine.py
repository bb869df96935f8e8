"""Standard and PSD color change rules with simultaneous-round propagation.

Every round is computed against the blue set at the start of that round, so
all forces in a round are independent of each other. The ``*_bits`` helpers
work on raw adjacency bitsets and are the hot path of the exhaustive scans.
"""

from __future__ import annotations

from collections.abc import Sequence

from forcing_lab.graphs.algebra import component_masks, is_connected_within
from forcing_lab.models.graph import Graph, GraphError, VertexSet, iter_bits
from forcing_lab.models.results import Force, PropagationRecord
from forcing_lab.models.rule import Rule


class PreconditionError(RuntimeError):
    """Raised when an operation's documented preconditions do not hold."""


# ---- Bitset kernels


def _standard_round(adj: Sequence[int], white: int, blue: int) -> int:
    forced = 0
    for u in iter_bits(blue):
        nb = adj[u] & white
        if nb and not nb & (nb - 1):
            forced |= nb
    return forced


def _psd_round(adj: Sequence[int], white: int, blue: int) -> int:
    forced = 0
    for comp in component_masks(adj, white):
        for u in iter_bits(blue):
            nb = adj[u] & comp
            if nb and not nb & (nb - 1):
                forced |= nb
    return forced


def round_bits(adj: Sequence[int], full: int, blue: int, psd: bool) -> int:
    """Bitset of white vertices forced in one round from ``blue``."""
    white = full & ~blue
    if not white:
        return 0
    if psd:
        return _psd_round(adj, white, blue)
    return _standard_round(adj, white, blue)


def propagation_time_bits(adj: Sequence[int], full: int, blue: int, psd: bool) -> int | None:
    time = 0
    while blue != full:
        forced = round_bits(adj, full, blue, psd)
        if not forced:
            return None
        blue |= forced
        time += 1
    return time


def _round_forces(adj: Sequence[int], full: int, blue: int, psd: bool) -> list[Force]:
    """One witness force per forced vertex, choosing the lowest-index forcer."""
    white = full & ~blue
    if not white:
        return []
    regions = component_masks(adj, white) if psd else [white]
    forcer_of: dict[int, int] = {}
    for u in iter_bits(blue):
        for region in regions:
            nb = adj[u] & region
            if nb and not nb & (nb - 1):
                w = nb.bit_length() - 1
                forcer_of.setdefault(w, u)
    return sorted(((u, w) for w, u in forcer_of.items()), key=lambda force: force[1])


# ---- Public operations


def step(g: Graph, blue: VertexSet, rule: Rule) -> VertexSet:
    """The full simultaneous round ``B^(1)`` forced from ``blue``."""
    _check_width(g, blue)
    return VertexSet(g.n, round_bits(g.adj, g.full, blue.bits, rule is Rule.PSD))


def forced_in_round(g: Graph, blue: VertexSet, rule: Rule) -> list[Force]:
    """Witness ``(forcer, forced)`` pairs for one round, ordered by forced vertex."""
    _check_width(g, blue)
    return _round_forces(g.adj, g.full, blue.bits, rule is Rule.PSD)


def propagate(g: Graph, b: VertexSet, rule: Rule) -> PropagationRecord:
    _check_width(g, b)
    psd = rule is Rule.PSD
    full = g.full
    blue = b.bits
    rounds: list[VertexSet] = []
    closures = [b]
    forces: list[tuple[Force, ...]] = []
    while blue != full:
        round_forces = _round_forces(g.adj, full, blue, psd)
        if not round_forces:
            break
        forced = 0
        for _, w in round_forces:
            forced |= 1 << w
        blue |= forced
        rounds.append(VertexSet(g.n, forced))
        closures.append(VertexSet(g.n, blue))
        forces.append(tuple(round_forces))
    time = len(rounds) if blue == full else None
    return PropagationRecord(
        rule=rule,
        initial=b,
        rounds=tuple(rounds),
        closures=tuple(closures),
        forces=tuple(forces),
        time=time,
    )


def propagation_time(g: Graph, b: VertexSet, rule: Rule) -> int | None:
    """Rounds until every vertex is blue; ``None`` when ``b`` is not a forcing set."""
    _check_width(g, b)
    return propagation_time_bits(g.adj, g.full, b.bits, rule is Rule.PSD)


def is_forcing_set(g: Graph, b: VertexSet, rule: Rule) -> bool:
    return propagation_time(g, b, rule) is not None


def is_slow_forcing_set(g: Graph, b: VertexSet, rule: Rule) -> bool:
    """A proper forcing subset that needs at least two rounds."""
    if b.bits == g.full:
        return False
    time = propagation_time(g, b, rule)
    return time is not None and time >= 2


def psd_reduce_set(g: Graph, b: VertexSet) -> VertexSet:
    """Replace each round-one forcer in ``b`` by the vertex it forces.

    Requires ``b`` to be a PSD forcing set with connected remainder ``g - b``
    and positive propagation time. The result has the same size and, when the
    original time is at least 2, forces in exactly one round fewer.
    """
    _check_width(g, b)
    time = propagation_time(g, b, Rule.PSD)
    if time is None:
        raise PreconditionError("psd_reduce_set needs a PSD forcing set.")
    if time == 0:
        raise PreconditionError("psd_reduce_set needs positive propagation time.")
    if not is_connected_within(g, b.complement()):
        raise PreconditionError("psd_reduce_set needs g - b to be connected.")
    reduced = b.bits
    for u, w in _round_forces(g.adj, g.full, b.bits, psd=True):
        reduced = (reduced & ~(1 << u)) | (1 << w)
    return VertexSet(g.n, reduced)


def _check_width(g: Graph, s: VertexSet) -> None:
    if s.n != g.n:
        raise GraphError(f"Vertex set of width {s.n} used with a graph of order {g.n}.")


__all__ = [
    "PreconditionError",
    "forced_in_round",
    "is_forcing_set",
    "is_slow_forcing_set",
    "propagate",
    "propagation_time",
    "propagation_time_bits",
    "psd_reduce_set",
    "round_bits",
    "step",
]
