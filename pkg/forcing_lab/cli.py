"""Command-line surface: analyze, batch, conjecture and generate.

stdout carries only JSON or graph6 payloads; diagnostics go to stderr through
logging. Exit codes: 0 ok, 1 some stream lines failed, 2 parse or validation
error, 3 order cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import logging
import random
import sys
from collections.abc import Sequence
from pathlib import Path

from dotenv import load_dotenv
from pydantic import ValidationError

from forcing_lab.analysis.analyzer import create_analyzer
from forcing_lab.analysis.batch import LineStatus, analysis_worker, conjecture_worker, run_lines
from forcing_lab.config import ForcingLabConfig, OrderCapExceededError
from forcing_lab.graphs.construction import (
    from_construction_tree,
    random_cograph_tree,
    random_psd_fast_join,
    random_standard_fast_join,
    random_threshold_tree,
)
from forcing_lab.graphs.generators import generate
from forcing_lab.graphs.graph6 import iter_graph6_lines, to_graph6
from forcing_lab.models.family import FamilyName, FamilySpec
from forcing_lab.models.graph import Graph, GraphError
from forcing_lab.models.report import ConjectureSummary, CounterexampleRecord
from forcing_lab.models.rule import Rule
from forcing_lab.models.verdicts import ConjectureVerdict

EXIT_OK = 0
EXIT_PARTIAL = 1
EXIT_PARSE = 2
EXIT_CAP = 3

RULE_CHOICES = {
    "standard": (Rule.STANDARD,),
    "psd": (Rule.PSD,),
    "both": (Rule.STANDARD, Rule.PSD),
}

RANDOM_FAMILIES = ("threshold", "cograph", "fastjoin-psd", "fastjoin-standard")
FAMILY_CHOICES = tuple(name.value for name in FamilyName) + RANDOM_FAMILIES

logger = logging.getLogger("forcing_lab")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="forcing-lab",
        description="Standard and PSD zero forcing: exhaustive analysis and conjecture checks.",
    )
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument("--quiet", action="store_true", help="Only log warnings and errors.")
    verbosity.add_argument("--verbose", action="store_true", help="Log debug details.")

    caps = argparse.ArgumentParser(add_help=False)
    caps.add_argument(
        "--max-order",
        type=int,
        default=None,
        help="Largest order for exhaustive work (default: FORCING_LAB_MAX_ORDER or 16, at most 20).",
    )

    rules = argparse.ArgumentParser(add_help=False)
    rules.add_argument("--rule", choices=sorted(RULE_CHOICES), default="both")

    family = argparse.ArgumentParser(add_help=False)
    family.add_argument("--family", choices=FAMILY_CHOICES, help="Named graph family.")
    family.add_argument("--n", type=int, default=None, help="Order (or first side for complete_bipartite).")
    family.add_argument("--m", type=int, default=None, help="Second side for complete_bipartite.")
    family.add_argument("--k", type=int, default=None, help="Parameter of the sgap family.")
    family.add_argument("--order", type=int, default=None, help="Order for the random families.")

    jobs = argparse.ArgumentParser(add_help=False)
    jobs.add_argument("--jobs", type=int, default=1, help="Worker processes (default 1, in-process).")

    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser("analyze", parents=[caps, rules, family], help="Analyze one graph.")
    analyze.add_argument("--graph6", default=None, help="Graph in graph6 format.")
    analyze.set_defaults(handler=cmd_analyze)

    batch = sub.add_parser("batch", parents=[caps, rules, jobs], help="Analyze a graph6 stream.")
    batch.set_defaults(handler=cmd_batch)

    conjecture = sub.add_parser(
        "conjecture",
        parents=[caps, jobs],
        help="Look for connected graphs with upper propagation time 1 that are not fast joins.",
    )
    conjecture.add_argument("--which", choices=sorted(RULE_CHOICES), default="both")
    conjecture.set_defaults(handler=cmd_conjecture)

    gen = sub.add_parser("generate", parents=[family], help="Emit graph6 lines for a family.")
    gen.add_argument("--count", type=int, default=1, help="Graphs to draw from random families.")
    gen.add_argument("--seed", type=int, default=0, help="Seed for random families.")
    gen.set_defaults(handler=cmd_generate)
    return parser


# ---- Helpers


def _config(args: argparse.Namespace) -> ForcingLabConfig:
    return ForcingLabConfig(max_order=args.max_order, jobs=getattr(args, "jobs", 1))


def _family_spec(args: argparse.Namespace) -> FamilySpec:
    n = args.n if args.n is not None else args.order
    return FamilySpec(family=args.family, n=n, m=args.m, k=args.k)


def _emit(text: str) -> None:
    sys.stdout.write(text + "\n")
    sys.stdout.flush()


# ---- Commands


def cmd_analyze(args: argparse.Namespace) -> int:
    analyzer = create_analyzer(_config(args))
    if args.graph6 is not None:
        g = analyzer.graph_from_graph6(args.graph6)
    elif args.family is not None:
        if args.family in RANDOM_FAMILIES:
            raise GraphError(f"analyze needs a deterministic family, got {args.family!r}.")
        g = analyzer.graph_from_family(_family_spec(args))
    else:
        raise GraphError("analyze needs --graph6 or --family.")
    report = analyzer.analyze(g, RULE_CHOICES[args.rule])
    _emit(json.dumps(report.model_dump(mode="json"), indent=2))
    return EXIT_OK


def cmd_batch(args: argparse.Namespace) -> int:
    config = _config(args)
    worker = analysis_worker(config.max_order, RULE_CHOICES[args.rule])
    failed = 0
    for result in run_lines(worker, iter_graph6_lines(sys.stdin), jobs=config.jobs):
        if result.status is LineStatus.ERROR:
            failed += 1
        _emit(result.payload)
    if failed:
        logger.warning("%d line(s) failed", failed)
        return EXIT_PARTIAL
    return EXIT_OK


def cmd_conjecture(args: argparse.Namespace) -> int:
    config = _config(args)
    worker = conjecture_worker(config.max_order, RULE_CHOICES[args.which])
    summary = ConjectureSummary()
    for result in run_lines(worker, iter_graph6_lines(sys.stdin), jobs=config.jobs):
        if result.status is LineStatus.SKIPPED:
            summary.skipped += 1
            logger.info("Line %d skipped: %s", result.line, result.payload)
            continue
        if result.status is LineStatus.ERROR:
            summary.errors += 1
            _emit(result.payload)
            continue
        summary.checked += 1
        verdict = ConjectureVerdict.model_validate_json(result.payload)
        for rule in verdict.counterexample_rules():
            summary.counterexamples += 1
            record = CounterexampleRecord(counterexample=verdict.graph6, rule=rule)
            _emit(record.model_dump_json())
    _emit(summary.model_dump_json())
    return EXIT_PARTIAL if summary.errors else EXIT_OK


def _random_graph(name: str, order: int, rng: random.Random) -> Graph:
    if name == "threshold":
        return from_construction_tree(random_threshold_tree(order, rng))
    if name == "cograph":
        return from_construction_tree(random_cograph_tree(order, rng))
    if name == "fastjoin-psd":
        return random_psd_fast_join(order, rng)
    return random_standard_fast_join(order, rng)


def cmd_generate(args: argparse.Namespace) -> int:
    if args.family is None:
        raise GraphError("generate needs --family.")
    if args.family not in RANDOM_FAMILIES:
        _emit(to_graph6(generate(_family_spec(args))))
        return EXIT_OK
    order = args.order if args.order is not None else args.n
    if order is None:
        raise GraphError(f"{args.family} needs --order (or --n).")
    rng = random.Random(args.seed)
    for _ in range(args.count):
        _emit(to_graph6(_random_graph(args.family, order, rng)))
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.verbose:
        level = logging.DEBUG
    elif args.quiet:
        level = logging.WARNING
    else:
        level = logging.INFO
    logging.basicConfig(level=level, format="[%(levelname)s] %(message)s")
    load_dotenv(Path.cwd() / ".env")

    try:
        return args.handler(args)
    except OrderCapExceededError as exc:
        logger.error("%s", exc)
        return EXIT_CAP
    except (GraphError, ValidationError, ValueError) as exc:
        logger.error("%s", exc)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
