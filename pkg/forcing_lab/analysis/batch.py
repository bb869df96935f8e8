"""Order-preserving fan-out of per-line graph6 work across worker processes."""

from __future__ import annotations

import logging
from collections import deque
from collections.abc import Callable, Iterable, Iterator
from concurrent.futures import Executor, Future, ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from functools import partial
from itertools import islice

from forcing_lab.config import OrderCapExceededError
from forcing_lab.forcing.engine import PreconditionError
from forcing_lab.graphs.algebra import is_connected
from forcing_lab.models.graph import GraphError
from forcing_lab.models.report import ErrorRecord
from forcing_lab.models.rule import Rule

from .analyzer import ForcingAnalyzer

logger = logging.getLogger(__name__)

_WINDOW_PER_JOB = 8

NumberedLine = tuple[int, str]


class LineStatus(str, Enum):
    OK = "ok"
    SKIPPED = "skipped"
    ERROR = "error"


@dataclass(frozen=True, slots=True)
class LineResult:
    """Outcome for one input line; ``payload`` is JSON for ok/error lines and a note when skipped."""

    line: int
    status: LineStatus
    payload: str


def _error(line: int, text: str, exc: Exception) -> LineResult:
    record = ErrorRecord(line=line, input=text, error=str(exc))
    return LineResult(line=line, status=LineStatus.ERROR, payload=record.model_dump_json())


def analyze_line(item: NumberedLine, *, max_order: int, rules: tuple[Rule, ...]) -> LineResult:
    line, text = item
    analyzer = ForcingAnalyzer(max_order)
    try:
        report = analyzer.analyze(analyzer.graph_from_graph6(text), rules)
    except (GraphError, OrderCapExceededError, PreconditionError) as exc:
        return _error(line, text, exc)
    return LineResult(line=line, status=LineStatus.OK, payload=report.model_dump_json())


def conjecture_line(item: NumberedLine, *, max_order: int, rules: tuple[Rule, ...]) -> LineResult:
    line, text = item
    analyzer = ForcingAnalyzer(max_order)
    try:
        g = analyzer.graph_from_graph6(text)
        if not is_connected(g):
            return LineResult(line=line, status=LineStatus.SKIPPED, payload="disconnected")
        verdict = analyzer.check_conjectures(g, rules)
    except (GraphError, OrderCapExceededError, PreconditionError) as exc:
        return _error(line, text, exc)
    return LineResult(line=line, status=LineStatus.OK, payload=verdict.model_dump_json())


def _windowed(
    pool: Executor,
    worker: Callable[[NumberedLine], LineResult],
    items: Iterable[NumberedLine],
    window: int,
) -> Iterator[LineResult]:
    # At most ``window`` lines are in flight; the stream is read lazily.
    source = iter(items)
    pending: deque[Future[LineResult]] = deque(
        pool.submit(worker, item) for item in islice(source, window)
    )
    while pending:
        result = pending.popleft().result()
        for item in islice(source, 1):
            pending.append(pool.submit(worker, item))
        yield result


def run_lines(
    worker: Callable[[NumberedLine], LineResult],
    items: Iterable[NumberedLine],
    *,
    jobs: int = 1,
    window: int | None = None,
) -> Iterator[LineResult]:
    """Apply ``worker`` to every line; results come back in input order for any ``jobs``.

    With several workers at most ``window`` lines (default ``8 * jobs``) are
    read ahead of the result being yielded.
    """
    count = 0
    if jobs <= 1:
        for item in items:
            count += 1
            yield worker(item)
    else:
        ahead = window if window is not None else jobs * _WINDOW_PER_JOB
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for result in _windowed(pool, worker, items, max(ahead, 1)):
                count += 1
                yield result
    logger.info("Processed %d line(s) with %d worker(s)", count, jobs)


def analysis_worker(max_order: int, rules: Iterable[Rule]) -> Callable[[NumberedLine], LineResult]:
    return partial(analyze_line, max_order=max_order, rules=tuple(rules))


def conjecture_worker(max_order: int, rules: Iterable[Rule]) -> Callable[[NumberedLine], LineResult]:
    return partial(conjecture_line, max_order=max_order, rules=tuple(rules))


__all__ = [
    "LineResult",
    "LineStatus",
    "analysis_worker",
    "analyze_line",
    "conjecture_line",
    "conjecture_worker",
    "run_lines",
]
