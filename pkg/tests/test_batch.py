from __future__ import annotations

from collections.abc import Iterator

from forcing_lab.analysis.batch import LineStatus, analysis_worker, conjecture_worker, run_lines
from forcing_lab.models.rule import Rule


def _stream(count: int, consumed: list[int], bad_every: int = 0) -> Iterator[tuple[int, str]]:
    for line in range(1, count + 1):
        consumed.append(line)
        yield line, "bad!" if bad_every and line % bad_every == 0 else "A_"


def test_serial_run_reads_one_line_per_result() -> None:
    consumed: list[int] = []
    results = run_lines(analysis_worker(16, [Rule.PSD]), _stream(50, consumed))

    first = next(results)

    assert first.line == 1
    assert first.status is LineStatus.OK
    assert consumed == [1]
    results.close()


def test_pool_reads_only_a_bounded_window_ahead() -> None:
    consumed: list[int] = []
    results = run_lines(analysis_worker(16, [Rule.PSD]), _stream(2000, consumed), jobs=2, window=4)

    first = next(results)

    assert first.line == 1
    assert len(consumed) <= 5
    results.close()


def test_pool_keeps_input_order_and_error_lines() -> None:
    worker = conjecture_worker(16, [Rule.STANDARD, Rule.PSD])

    serial = list(run_lines(worker, _stream(40, [], bad_every=7)))
    pooled = list(run_lines(worker, _stream(40, [], bad_every=7), jobs=3, window=2))

    assert [r.line for r in pooled] == list(range(1, 41))
    assert pooled == serial
    assert [r.line for r in pooled if r.status is LineStatus.ERROR] == [7, 14, 21, 28, 35]
