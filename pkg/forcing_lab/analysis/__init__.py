"""Report orchestration and batch helpers."""

from .analyzer import ForcingAnalyzer, create_analyzer
from .batch import (
    LineResult,
    LineStatus,
    analysis_worker,
    analyze_line,
    conjecture_line,
    conjecture_worker,
    run_lines,
)

__all__ = [
    "ForcingAnalyzer",
    "LineResult",
    "LineStatus",
    "analysis_worker",
    "analyze_line",
    "conjecture_line",
    "conjecture_worker",
    "create_analyzer",
    "run_lines",
]
