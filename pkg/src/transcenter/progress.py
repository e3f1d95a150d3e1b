"""Per-language and per-page completion meters."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from .catalog import SourceItem


@dataclass(frozen=True)
class ProgressMeter:
    language: str
    scope: str  # "all" or a page_id
    translated: int
    total: int
    percent: float


def compute_meter(
    items: Iterable[SourceItem],
    language: str,
    scope: str,
    is_translated: Callable[[str], bool],
) -> ProgressMeter:
    """Count translated items in scope; an empty scope reads as 100% done."""
    total = 0
    translated = 0
    for item in items:
        total += 1
        if is_translated(item.item_id):
            translated += 1
    percent = 100.0 if total == 0 else 100.0 * translated / total
    return ProgressMeter(
        language=language, scope=scope, translated=translated, total=total, percent=percent
    )
