"""Exhaustive forcing-set search: forcing numbers, set families, time sets and throttling.

Forcing sets are closed upward, so a single scan in increasing numeric mask
order settles every subset: a mask is forcing as soon as one single-vertex
deletion is, and only the remaining masks are propagated. The propagated
masks that force are exactly the minimal forcing sets.
"""

from __future__ import annotations

import logging
import time
from collections.abc import Iterable
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from forcing_lab.config import ensure_within_cap
from forcing_lab.graphs.algebra import is_connected, is_connected_within
from forcing_lab.models.graph import Graph, VertexSet, iter_bits
from forcing_lab.models.results import FamilyKind, ForcingReport, PtSet, SetFamily
from forcing_lab.models.rule import Rule

from .engine import PreconditionError, propagation_time_bits

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class ForcingScan:
    """Outcome of one exhaustive pass over all subsets of ``V(G)``.

    ``forcing[mask]`` is 1 when ``mask`` is a forcing set. ``minimal`` lists
    every minimal forcing set with its propagation time, ordered by size and
    then lexicographically.
    """

    n: int
    rule: Rule
    forcing: bytes
    minimal: tuple[tuple[int, int], ...]

    def is_forcing(self, mask: int) -> bool:
        return bool(self.forcing[mask])

    @property
    def z(self) -> int:
        return self.minimal[0][0].bit_count()

    @property
    def z_upper(self) -> int:
        return max(mask.bit_count() for mask, _ in self.minimal)

    @property
    def trivial(self) -> bool:
        """The whole vertex set is the only minimal forcing set."""
        return len(self.minimal) == 1 and self.minimal[0][0] == (1 << self.n) - 1


def _mask_key(item: tuple[int, int]) -> tuple[int, tuple[int, ...]]:
    mask = item[0]
    return (mask.bit_count(), tuple(iter_bits(mask)))


@lru_cache(maxsize=8)
def _scan(g: Graph, rule: Rule) -> ForcingScan:
    started = time.perf_counter()
    psd = rule is Rule.PSD
    adj = g.adj
    full = g.full
    table = bytearray(1 << g.n)
    minimal: list[tuple[int, int]] = []
    propagated = 0
    for mask in range(1 << g.n):
        rest = mask
        while rest:
            low = rest & -rest
            if table[mask ^ low]:
                table[mask] = 1
                break
            rest ^= low
        if table[mask]:
            continue
        propagated += 1
        pt = propagation_time_bits(adj, full, mask, psd)
        if pt is not None:
            table[mask] = 1
            minimal.append((mask, pt))
    minimal.sort(key=_mask_key)
    logger.debug(
        "Scanned %d subsets of an order-%d graph (%s): %d propagated, %d minimal, %.1f ms",
        1 << g.n,
        g.n,
        rule.value,
        propagated,
        len(minimal),
        (time.perf_counter() - started) * 1000,
    )
    return ForcingScan(n=g.n, rule=rule, forcing=bytes(table), minimal=tuple(minimal))


def scan_forcing_sets(g: Graph, rule: Rule, *, cap: int | None = None) -> ForcingScan:
    ensure_within_cap(g.n, cap, "scan_forcing_sets")
    return _scan(g, rule)


def clear_scan_cache() -> None:
    """Drop memoized scans, e.g. before timing them."""
    _scan.cache_clear()


# ---- Families


def enumerate_forcing_families(
    g: Graph,
    rule: Rule,
    *,
    cap: int | None = None,
) -> tuple[SetFamily, SetFamily]:
    """Return the ``(minimum, minimal)`` forcing-set families."""
    scan = scan_forcing_sets(g, rule, cap=cap)
    z, z_upper = scan.z, scan.z_upper
    minimal_sets = tuple(VertexSet(g.n, mask) for mask, _ in scan.minimal)
    minimum_sets = tuple(s for s in minimal_sets if len(s) == z)
    minimum = SetFamily(rule=rule, kind=FamilyKind.MINIMUM, sets=minimum_sets, cardinality=(z, z))
    minimal = SetFamily(
        rule=rule,
        kind=FamilyKind.MINIMAL,
        sets=minimal_sets,
        cardinality=(z, z_upper),
    )
    return minimum, minimal


def forcing_number(g: Graph, rule: Rule, *, cap: int | None = None) -> int:
    return scan_forcing_sets(g, rule, cap=cap).z


def upper_forcing_number(g: Graph, rule: Rule, *, cap: int | None = None) -> int:
    return scan_forcing_sets(g, rule, cap=cap).z_upper


# ---- Propagation-time sets


def pt_sets(g: Graph, rule: Rule, *, cap: int | None = None) -> tuple[PtSet, PtSet]:
    """Times realized by minimum sets (plain) and by minimal sets (expanded)."""
    scan = scan_forcing_sets(g, rule, cap=cap)
    z = scan.z
    plain = {pt for mask, pt in scan.minimal if mask.bit_count() == z}
    expanded = {pt for _, pt in scan.minimal}
    return (
        PtSet.from_times(rule, plain, expanded=False, trivial=scan.trivial),
        PtSet.from_times(rule, expanded, expanded=True, trivial=scan.trivial),
    )


def fixed_pt(g: Graph, rule: Rule, *, cap: int | None = None) -> int | None:
    """The common propagation time of all minimal forcing sets, if there is one."""
    _, expanded = pt_sets(g, rule, cap=cap)
    if len(expanded.times) == 1:
        return expanded.times[0]
    return None


def lower_pt(g: Graph, rule: Rule, *, cap: int | None = None) -> int:
    return pt_sets(g, rule, cap=cap)[1].lower


def upper_pt(g: Graph, rule: Rule, *, cap: int | None = None) -> int:
    return pt_sets(g, rule, cap=cap)[1].upper


def time_witnesses(g: Graph, rule: Rule, *, cap: int | None = None) -> dict[int, VertexSet]:
    """First minimal forcing set (in family order) realizing each expanded time."""
    scan = scan_forcing_sets(g, rule, cap=cap)
    witnesses: dict[int, VertexSet] = {}
    for mask, pt in scan.minimal:
        witnesses.setdefault(pt, VertexSet(g.n, mask))
    return dict(sorted(witnesses.items()))


def fixed_pt_census(
    graphs: Iterable[Graph],
    rule: Rule,
    value: int,
    *,
    cap: int | None = None,
) -> list[Graph]:
    """The graphs whose fixed propagation time equals ``value``."""
    return [g for g in graphs if fixed_pt(g, rule, cap=cap) == value]


# ---- Throttling


def throttling_of_set(g: Graph, b: VertexSet, rule: Rule = Rule.STANDARD) -> int | None:
    pt = propagation_time_bits(g.adj, g.full, b.bits, rule is Rule.PSD)
    if pt is None:
        return None
    return len(b) + pt


def throttling(g: Graph, rule: Rule = Rule.STANDARD, *, cap: int | None = None) -> int:
    """Minimum of ``|B| + pt(G, B)`` over every forcing set ``B``, not only minimal ones."""
    scan = scan_forcing_sets(g, rule, cap=cap)
    psd = rule is Rule.PSD
    best = g.n
    size = scan.z
    # A proper subset of size k spends at least one round, so k + 1 must beat best.
    while size + 1 < best:
        for combo in combinations(range(g.n), size):
            mask = 0
            for v in combo:
                mask |= 1 << v
            if not scan.forcing[mask]:
                continue
            pt = propagation_time_bits(g.adj, g.full, mask, psd)
            best = min(best, size + pt)
        size += 1
    return best


# ---- Connected-remainder PSD sets


def min_psd_set_with_connected_complement(g: Graph, *, cap: int | None = None) -> VertexSet:
    """First minimum PSD forcing set ``B`` (family order) with ``G - B`` connected."""
    if not is_connected(g):
        raise PreconditionError("min_psd_set_with_connected_complement needs a connected graph.")
    minimum, _ = enumerate_forcing_families(g, Rule.PSD, cap=cap)
    for b in minimum.sets:
        if is_connected_within(g, b.complement()):
            return b
    raise PreconditionError("No minimum PSD forcing set leaves a connected remainder.")


def verify_no_fixed_psd_above_one(g: Graph, *, cap: int | None = None) -> bool:
    """A fixed PSD propagation time, when present, equals 1 (vacuous for trivial graphs)."""
    if not is_connected(g):
        raise PreconditionError("verify_no_fixed_psd_above_one needs a connected graph.")
    scan = scan_forcing_sets(g, Rule.PSD, cap=cap)
    if scan.trivial:
        return True
    value = fixed_pt(g, Rule.PSD, cap=cap)
    return value is None or value == 1


# ---- Reports


def forcing_report(g: Graph, rule: Rule, *, cap: int | None = None) -> ForcingReport:
    scan = scan_forcing_sets(g, rule, cap=cap)
    plain, expanded = pt_sets(g, rule, cap=cap)
    return ForcingReport(
        order=g.n,
        rule=rule,
        z=scan.z,
        z_upper=scan.z_upper,
        plain=plain,
        expanded=expanded,
        fixed_pt=expanded.times[0] if len(expanded.times) == 1 else None,
        throttling=throttling(g, cap=cap) if rule is Rule.STANDARD else None,
        witnesses=time_witnesses(g, rule, cap=cap),
    )


__all__ = [
    "ForcingScan",
    "clear_scan_cache",
    "enumerate_forcing_families",
    "fixed_pt",
    "fixed_pt_census",
    "forcing_number",
    "forcing_report",
    "lower_pt",
    "min_psd_set_with_connected_complement",
    "pt_sets",
    "scan_forcing_sets",
    "throttling",
    "throttling_of_set",
    "time_witnesses",
    "upper_forcing_number",
    "upper_pt",
    "verify_no_fixed_psd_above_one",
]
