"""Exhaustive-scan performance smoke test.

Times the monotone forcing-set scan, fort enumeration and throttling for a
named family at increasing orders and emits one JSON document with a
checkpoint per order. The question it answers: does desk-scale work stay
interactive up to the default order cap?
"""

from __future__ import annotations

import argparse
import json
import logging
import statistics
import sys
import time
from pathlib import Path
from typing import Any

CURRENT_DIR = Path(__file__).resolve().parent
PROJECT_ROOT = CURRENT_DIR.parent
if str(PROJECT_ROOT) not in sys.path:
    sys.path.insert(0, str(PROJECT_ROOT))

from forcing_lab.forcing.forts import enumerate_forts
from forcing_lab.forcing.search import clear_scan_cache, scan_forcing_sets, throttling
from forcing_lab.graphs.generators import generate
from forcing_lab.models.family import FamilyName, FamilySpec
from forcing_lab.models.graph import Graph
from forcing_lab.models.rule import Rule

_MULTI_PARAMETER = {FamilyName.COMPLETE_BIPARTITE, FamilyName.SGAP}


def parse_args() -> argparse.Namespace:
    parser = argparse.ArgumentParser(description="Exhaustive forcing scan performance smoke test")
    parser.add_argument(
        "--family",
        choices=[name.value for name in FamilyName if name not in _MULTI_PARAMETER],
        default="wheel",
        help="Graph family to time (default wheel).",
    )
    parser.add_argument(
        "--orders",
        type=str,
        default="8,10,12,14,16",
        help="Comma-separated orders to time (e.g. 8,12,16).",
    )
    parser.add_argument(
        "--repeat",
        type=int,
        default=3,
        help="Timed runs per order; the scan cache is cleared before each (default 3).",
    )
    parser.add_argument(
        "--forts",
        action="store_true",
        help="Also time minimal fort enumeration (slow above order 14).",
    )
    parser.add_argument(
        "--output",
        type=Path,
        default=None,
        help="Optional JSON output path (defaults to stdout).",
    )
    parser.add_argument(
        "--quiet",
        action="store_true",
        help="Suppress progress logs; only emit JSON telemetry.",
    )
    return parser.parse_args()


def average(values: list[float]) -> float:
    return statistics.fmean(values) if values else 0.0


def timed_ms(fn, *args, **kwargs) -> tuple[float, Any]:
    start = time.perf_counter()
    result = fn(*args, **kwargs)
    return (time.perf_counter() - start) * 1000, result


def measure(g: Graph, repeat: int, include_forts: bool) -> dict[str, Any]:
    metrics: dict[str, Any] = {}
    for rule in Rule:
        scan_times: list[float] = []
        scan = None
        for _ in range(repeat):
            clear_scan_cache()
            elapsed, scan = timed_ms(scan_forcing_sets, g, rule)
            scan_times.append(elapsed)
        metrics[f"{rule.value}_avg_scan_ms"] = average(scan_times)
        metrics[f"{rule.value}_z"] = scan.z
        metrics[f"{rule.value}_minimal_sets"] = len(scan.minimal)

    elapsed, value = timed_ms(throttling, g)
    metrics["throttling_ms"] = elapsed
    metrics["throttling"] = value

    if include_forts:
        elapsed, family = timed_ms(enumerate_forts, g, Rule.STANDARD, True)
        metrics["minimal_forts_ms"] = elapsed
        metrics["minimal_forts"] = len(family.forts)
    return metrics


def main() -> None:
    args = parse_args()

    logging.basicConfig(
        level=logging.INFO if not args.quiet else logging.WARNING,
        format="[%(levelname)s] %(message)s",
    )
    logger = logging.getLogger("perf_smoke")

    orders = sorted({int(chunk.strip()) for chunk in args.orders.split(",") if chunk.strip()})
    if not orders:
        raise ValueError("No valid orders provided via --orders")

    checkpoints: list[dict[str, Any]] = []
    for order in orders:
        g = generate(FamilySpec(family=args.family, n=order))
        metrics = measure(g, max(args.repeat, 1), args.forts)
        logger.info(
            "Order %d | standard=%.1fms psd=%.1fms",
            order,
            metrics["standard_avg_scan_ms"],
            metrics["psd_avg_scan_ms"],
        )
        checkpoints.append({"order": order, "edges": g.size, **metrics})

    payload = {
        "family": args.family,
        "orders": orders,
        "repeat": args.repeat,
        "checkpoints": checkpoints,
    }

    output = json.dumps(payload, indent=2)
    if args.output:
        args.output.write_text(output)
    else:
        print(output)


if __name__ == "__main__":
    main()
