"""Runtime configuration and order caps for exhaustive operations."""

from __future__ import annotations

import os
from dataclasses import dataclass

MAX_ORDER_ENV = "FORCING_LAB_MAX_ORDER"
DEFAULT_MAX_ORDER = 16
HARD_MAX_ORDER = 20


class OrderCapExceededError(RuntimeError):
    """Raised when an exhaustive operation is asked to run above its order cap."""


@dataclass(slots=True)
class ForcingLabConfig:
    """Caps and worker count for the command-line surface.

    Parameters
    ----------
    max_order:
        Largest order the exhaustive family computations accept. ``None``
        reads ``FORCING_LAB_MAX_ORDER`` and falls back to ``DEFAULT_MAX_ORDER``.
    jobs:
        Worker processes for streamed commands; ``1`` runs in-process.
    """

    max_order: int | None = None
    jobs: int = 1

    def __post_init__(self) -> None:
        if self.max_order is None:
            raw = os.getenv(MAX_ORDER_ENV)
            if raw is None or not raw.strip():
                self.max_order = DEFAULT_MAX_ORDER
            else:
                try:
                    self.max_order = int(raw)
                except ValueError as exc:
                    raise ValueError(f"{MAX_ORDER_ENV} must be an integer, got {raw!r}.") from exc
        if not 1 <= self.max_order <= HARD_MAX_ORDER:
            raise ValueError(f"max_order must be in [1, {HARD_MAX_ORDER}], got {self.max_order}.")
        if self.jobs < 1:
            raise ValueError(f"jobs must be >= 1, got {self.jobs}.")


def ensure_within_cap(order: int, cap: int | None, operation: str) -> None:
    """Raise ``OrderCapExceededError`` when ``order`` exceeds ``cap`` (``None`` means the hard cap)."""
    limit = HARD_MAX_ORDER if cap is None else cap
    if order > limit:
        raise OrderCapExceededError(
            f"{operation} is exhaustive and capped at order {limit}; got order {order}."
        )


__all__ = [
    "DEFAULT_MAX_ORDER",
    "ForcingLabConfig",
    "HARD_MAX_ORDER",
    "MAX_ORDER_ENV",
    "OrderCapExceededError",
    "ensure_within_cap",
]
