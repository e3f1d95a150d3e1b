from __future__ import annotations

import pytest

from transcenter.errors import RatingOutOfRange, SelfReview, UnknownTranslation


@pytest.fixture
def translated(seeded):
    seeded.engine.submit_translation(
        seeded.alice.member_id, seeded.items[0].item_id, "es", "Explora"
    )
    seeded.item_id = seeded.items[0].item_id
    return seeded


class TestRatingValidation:
    @pytest.mark.parametrize("bad", [0, 6, -1, "4", 3.5, True, None])
    def test_out_of_range(self, translated, bad):
        with pytest.raises(RatingOutOfRange):
            translated.engine.rate_translation(
                translated.bob.member_id, translated.item_id, "es", bad
            )

    def test_requires_translation(self, seeded):
        with pytest.raises(UnknownTranslation):
            seeded.engine.rate_translation(
                seeded.bob.member_id, seeded.items[1].item_id, "es", 4
            )

    def test_self_review_blocked(self, translated):
        with pytest.raises(SelfReview):
            translated.engine.rate_translation(
                translated.alice.member_id, translated.item_id, "es", 5
            )

    def test_author_may_rate_after_someone_else_edits(self, translated):
        eng = translated.engine
        eng.edit_translation(translated.bob.member_id, translated.item_id, "es", 1, "Explora ya")
        record = eng.rate_translation(translated.alice.member_id, translated.item_id, "es", 4)
        assert record.reviewed_version == 2


class TestAggregate:
    def test_mean_and_count(self, translated):
        eng = translated.engine
        carol = eng.register_member("carol", "pw")
        eng.rate_translation(translated.bob.member_id, translated.item_id, "es", 5)
        eng.rate_translation(carol.member_id, translated.item_id, "es", 2)
        aggregate = eng.rating_aggregate(translated.item_id, "es")
        assert aggregate.count == 2
        assert aggregate.mean == pytest.approx(3.5)

    def test_empty_aggregate(self, translated):
        aggregate = translated.engine.rating_aggregate(translated.item_id, "es")
        assert aggregate.count == 0
        assert aggregate.mean is None

    def test_rerate_supersedes(self, translated):
        eng = translated.engine
        eng.rate_translation(translated.bob.member_id, translated.item_id, "es", 2)
        eng.rate_translation(translated.bob.member_id, translated.item_id, "es", 5)
        aggregate = eng.rating_aggregate(translated.item_id, "es")
        assert (aggregate.count, aggregate.mean) == (1, 5.0)

    def test_rating_feeds_deficit(self, translated):
        eng = translated.engine
        eng.rate_translation(translated.bob.member_id, translated.item_id, "es", 3)
        ranked = dict((i.item_id, s) for i, s in eng.build_worklist("es"))
        assert ranked[translated.item_id].rev == 2.0


class TestStaleness:
    def test_listing_flags_pre_edit_reviews(self, translated):
        eng = translated.engine
        eng.rate_translation(translated.bob.member_id, translated.item_id, "es", 2)
        eng.edit_translation(translated.bob.member_id, translated.item_id, "es", 1, "mejor")
        carol = eng.register_member("carol", "pw")
        eng.rate_translation(carol.member_id, translated.item_id, "es", 5)
        listing = eng.list_reviews(translated.item_id, "es")
        by_reviewer = {record.reviewer: stale for record, stale in listing}
        assert by_reviewer[translated.bob.member_id] is True
        assert by_reviewer[carol.member_id] is False
