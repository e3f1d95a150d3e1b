"""Deterministic priority scoring over items for one target language.

The total is a weighted linear combination of four factors: where the item
occurs (its category), how often it is seen (log-damped view count), how many
members requested it, and the quality deficit of its current translation.
Untranslated items carry the maximum deficit of 5, translated-but-unrated
items 2.5, and rated items ``5 - mean rating``.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .catalog import SourceItem
from .errors import NothingToTranslate

DEFAULT_CATEGORY_WEIGHTS: dict[str, float] = {
    "menu-link": 3.0,
    "heading": 2.0,
    "button": 2.0,
    "informational-text": 1.0,
    "other": 1.0,
}

UNTRANSLATED_DEFICIT = 5.0
UNRATED_DEFICIT = 2.5


@dataclass(frozen=True)
class PriorityWeights:
    w_cat: float = 2.0
    w_view: float = 1.0
    w_req: float = 1.5
    w_rev: float = 1.0
    category_weight: dict[str, float] = field(
        default_factory=lambda: dict(DEFAULT_CATEGORY_WEIGHTS)
    )

    def __post_init__(self):
        for name in ("w_cat", "w_view", "w_req", "w_rev"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be non-negative")
        for category, weight in self.category_weight.items():
            if weight < 0:
                raise ValueError(f"category weight for {category} must be non-negative")


@dataclass(frozen=True)
class ItemStats:
    view_count: int
    request_count: int
    translated: bool
    rating_mean: float | None = None


@dataclass(frozen=True)
class PriorityScore:
    item_id: str
    language: str
    cat: float
    view: float
    req: float
    rev: float
    total: float

    @property
    def components(self) -> dict[str, float]:
        return {"cat": self.cat, "view": self.view, "req": self.req, "rev": self.rev}


def quality_deficit(translated: bool, rating_mean: float | None) -> float:
    if not translated:
        return UNTRANSLATED_DEFICIT
    if rating_mean is None:
        return UNRATED_DEFICIT
    return 5.0 - rating_mean


def score_item(
    item: SourceItem, language: str, stats: ItemStats, weights: PriorityWeights
) -> PriorityScore:
    cat = weights.category_weight.get(item.category, weights.category_weight["other"])
    view = math.log2(1 + stats.view_count)
    req = float(stats.request_count)
    rev = quality_deficit(stats.translated, stats.rating_mean)
    total = (
        weights.w_cat * cat + weights.w_view * view + weights.w_req * req + weights.w_rev * rev
    )
    return PriorityScore(
        item_id=item.item_id, language=language, cat=cat, view=view, req=req, rev=rev, total=total
    )


def build_worklist(
    items: Iterable[SourceItem],
    language: str,
    stats_for: Callable[[SourceItem], ItemStats],
    weights: PriorityWeights,
) -> list[tuple[SourceItem, PriorityScore]]:
    """Score every item and order by descending total, ties by ascending key."""
    scored = [(item, score_item(item, language, stats_for(item), weights)) for item in items]
    scored.sort(key=lambda pair: (-pair[1].total, pair[0].key))
    return scored


def pick_random(candidates: Iterable[SourceItem], seed: int) -> SourceItem:
    """Uniform pick among the candidates, reproducible for a given seed.

    Candidates are ordered by key first so the pick depends only on the seed
    and the candidate set, not on iteration order.
    """
    ordered = sorted(candidates, key=lambda item: item.key)
    if not ordered:
        raise NothingToTranslate("no untranslated items for this language")
    rng = random.Random(seed)
    return ordered[rng.randrange(len(ordered))]
