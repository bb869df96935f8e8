"""Façade that composes search and classification into per-graph reports."""

from __future__ import annotations

from collections.abc import Iterable, Sequence

from forcing_lab.classify.conjectures import BOTH_RULES, conjecture_check
from forcing_lab.classify.fast_join import fast_join_verdict
from forcing_lab.classify.threshold import is_threshold
from forcing_lab.config import ForcingLabConfig, ensure_within_cap
from forcing_lab.forcing.search import forcing_report
from forcing_lab.graphs.generators import generate
from forcing_lab.graphs.graph6 import from_graph6, to_graph6
from forcing_lab.models.family import FamilySpec
from forcing_lab.models.graph import Graph
from forcing_lab.models.report import AnalysisReport, FastJoinFlags
from forcing_lab.models.results import ForcingReport
from forcing_lab.models.rule import Rule
from forcing_lab.models.verdicts import ConjectureVerdict


class ForcingAnalyzer:
    """Runs the exhaustive analyses under one order cap."""

    def __init__(self, max_order: int):
        """Internal constructor; prefer ``create_analyzer`` for public use."""
        self._max_order = max_order

    @property
    def max_order(self) -> int:
        return self._max_order

    # ------------------------------------------------------------------ Inputs
    def graph_from_graph6(self, text: str) -> Graph:
        return from_graph6(text)

    def graph_from_family(self, spec: FamilySpec) -> Graph:
        return generate(spec)

    # ------------------------------------------------------------------ Queries
    def forcing_report(self, g: Graph, rule: Rule) -> ForcingReport:
        return forcing_report(g, rule, cap=self._max_order)

    def analyze(self, g: Graph, rules: Sequence[Rule] = (Rule.STANDARD, Rule.PSD)) -> AnalysisReport:
        """Build the JSON-facing report for ``g`` under the requested rules."""
        ensure_within_cap(g.n, self._max_order, "analyze")
        ordered = [rule for rule in (Rule.STANDARD, Rule.PSD) if rule in rules]
        reports = {rule: self.forcing_report(g, rule) for rule in ordered}
        standard = reports.get(Rule.STANDARD)
        psd = reports.get(Rule.PSD)

        fast_join = None
        if g.n >= 2:
            verdict = fast_join_verdict(g)
            fast_join = FastJoinFlags(psd=verdict.psd_fast, standard=verdict.standard_fast)
        return AnalysisReport(
            graph6=to_graph6(g),
            order=g.n,
            rules=ordered,
            z=standard.z if standard is not None else None,
            z_upper=standard.z_upper if standard is not None else None,
            zplus=psd.z if psd is not None else None,
            zplus_upper=psd.z_upper if psd is not None else None,
            pt_set={rule.value: list(r.plain.times) for rule, r in reports.items()},
            ept_set={rule.value: list(r.expanded.times) for rule, r in reports.items()},
            gaps={rule.value: list(r.expanded.gaps) for rule, r in reports.items()},
            fixed_pt={rule.value: r.fixed_pt for rule, r in reports.items()},
            trivial={rule.value: r.expanded.trivial for rule, r in reports.items()},
            throttling=standard.throttling if standard is not None else None,
            fast_join=fast_join,
            threshold=is_threshold(g),
            witnesses={
                rule.value: {str(t): s.to_list() for t, s in r.witnesses.items()}
                for rule, r in reports.items()
            },
        )

    def check_conjectures(self, g: Graph, rules: Iterable[Rule] = BOTH_RULES) -> ConjectureVerdict:
        ensure_within_cap(g.n, self._max_order, "conjecture_check")
        return conjecture_check(g, rules, cap=self._max_order)


def create_analyzer(config: ForcingLabConfig | None = None) -> ForcingAnalyzer:
    """Build a ForcingAnalyzer from runtime configuration (env-aware by default)."""
    cfg = config or ForcingLabConfig()
    return ForcingAnalyzer(cfg.max_order)


__all__ = ["ForcingAnalyzer", "create_analyzer"]
