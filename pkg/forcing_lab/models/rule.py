"""Color change rules."""

from __future__ import annotations

from enum import Enum


class Rule(str, Enum):
    STANDARD = "standard"
    PSD = "psd"


__all__ = ["Rule"]
