"""Community rating and reviewing of translations.

A member holds at most one live review per (item, language); a newer rating
supersedes their earlier one.  Reviews survive edits of the translation but
are flagged stale once the reviewed version is no longer current.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import RatingOutOfRange, SelfReview


@dataclass
class ReviewRecord:
    reviewer: str
    item_id: str
    language: str
    reviewed_version: int
    rating: int
    body: str | None
    timestamp: float

    def to_dict(self) -> dict:
        return {
            "reviewer": self.reviewer,
            "item_id": self.item_id,
            "language": self.language,
            "reviewed_version": self.reviewed_version,
            "rating": self.rating,
            "body": self.body,
            "timestamp": self.timestamp,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "ReviewRecord":
        return cls(
            d["reviewer"],
            d["item_id"],
            d["language"],
            d["reviewed_version"],
            d["rating"],
            d["body"],
            d["timestamp"],
        )


@dataclass
class RatingAggregate:
    item_id: str
    language: str
    count: int
    mean: float | None  # absent while count == 0


class ReviewStore:
    def __init__(self):
        # item_id -> language -> reviewer -> live review
        self.reviews: dict[str, dict[str, dict[str, ReviewRecord]]] = {}

    def rate(
        self,
        reviewer: str,
        item_id: str,
        language: str,
        current_version: int,
        current_author: str,
        rating: int,
        body: str | None,
        timestamp: float,
    ) -> ReviewRecord:
        if not isinstance(rating, int) or isinstance(rating, bool) or not 1 <= rating <= 5:
            raise RatingOutOfRange(f"rating must be an integer in 1..5, got {rating!r}")
        if reviewer == current_author:
            raise SelfReview("the author of the current revision cannot rate it")
        record = ReviewRecord(
            reviewer=reviewer,
            item_id=item_id,
            language=language,
            reviewed_version=current_version,
            rating=rating,
            body=body,
            timestamp=timestamp,
        )
        self.reviews.setdefault(item_id, {}).setdefault(language, {})[reviewer] = record
        return record

    def live_reviews(self, item_id: str, language: str) -> list[ReviewRecord]:
        per_reviewer = self.reviews.get(item_id, {}).get(language, {})
        return sorted(per_reviewer.values(), key=lambda r: (r.timestamp, r.reviewer))

    def aggregate(self, item_id: str, language: str) -> RatingAggregate:
        live = self.live_reviews(item_id, language)
        if not live:
            return RatingAggregate(item_id=item_id, language=language, count=0, mean=None)
        mean = sum(r.rating for r in live) / len(live)
        return RatingAggregate(item_id=item_id, language=language, count=len(live), mean=mean)

    def listing(
        self, item_id: str, language: str, current_version: int
    ) -> list[tuple[ReviewRecord, bool]]:
        """Live reviews in chronological order with their staleness flag."""
        return [
            (record, record.reviewed_version < current_version)
            for record in self.live_reviews(item_id, language)
        ]

    def state_dict(self) -> dict:
        return {
            "reviews": [
                record.to_dict()
                for by_language in self.reviews.values()
                for by_reviewer in by_language.values()
                for record in by_reviewer.values()
            ]
        }

    def load_state(self, d: dict) -> None:
        self.reviews = {}
        for r_dict in d["reviews"]:
            record = ReviewRecord.from_dict(r_dict)
            self.reviews.setdefault(record.item_id, {}).setdefault(record.language, {})[
                record.reviewer
            ] = record
