from __future__ import annotations

import pytest

from transcenter.errors import (
    BadOption,
    BadReplyRef,
    DuplicateTerm,
    EmptyBody,
    EmptyText,
    PollClosed,
    TooFewOptions,
    UnknownForum,
    UnknownTerm,
    UnknownThread,
)


class TestForums:
    def test_fixed_and_language_forums(self, seeded):
        eng = seeded.engine
        eng.create_thread("general", seeded.alice.member_id, "Hello", "First post")
        eng.create_thread("language:es", seeded.bob.member_id, "Hola", "Primer mensaje")
        assert [t.title for t in eng.list_threads("general")] == ["Hello"]
        assert [t.title for t in eng.list_threads("language:es")] == ["Hola"]
        assert eng.list_threads("help") == []

    def test_unknown_forum(self, seeded):
        with pytest.raises(UnknownForum):
            seeded.engine.list_threads("language:fr")
        with pytest.raises(UnknownForum):
            seeded.engine.create_thread("offtopic", seeded.alice.member_id, "t", "b")

    def test_replies_and_reply_refs(self, seeded):
        eng = seeded.engine
        thread = eng.create_thread("help", seeded.alice.member_id, "Q", "How do I start?")
        first = thread.posts[0]
        reply = eng.reply(thread.thread_id, seeded.bob.member_id, "Read this", first.post_id)
        assert reply.reply_to == first.post_id
        with pytest.raises(BadReplyRef):
            eng.reply(thread.thread_id, seeded.bob.member_id, "bad", "po-999999")
        with pytest.raises(UnknownThread):
            eng.reply("th-999999", seeded.bob.member_id, "lost")

    def test_empty_bodies(self, seeded):
        eng = seeded.engine
        with pytest.raises(EmptyBody):
            eng.create_thread("general", seeded.alice.member_id, "title", "  ")
        thread = eng.create_thread("general", seeded.alice.member_id, "title", "body")
        with pytest.raises(EmptyBody):
            eng.reply(thread.thread_id, seeded.bob.member_id, "")


class TestPolls:
    def test_create_and_vote(self, seeded):
        eng = seeded.engine
        poll = eng.create_poll(
            seeded.alice.member_id, "global", "Banner color?", ["red", "blue"]
        )
        eng.vote(poll.poll_id, seeded.alice.member_id, 0)
        tally = eng.vote(poll.poll_id, seeded.bob.member_id, 1)
        assert tally["counts"] == [1, 1]
        assert tally["voters"] == 2

    def test_revote_replaces(self, seeded):
        eng = seeded.engine
        poll = eng.create_poll(seeded.alice.member_id, "global", "Q?", ["a", "b"])
        eng.vote(poll.poll_id, seeded.bob.member_id, 0)
        eng.vote(poll.poll_id, seeded.bob.member_id, 1)
        assert eng.tally(poll.poll_id)["counts"] == [0, 1]

    def test_scope_validation(self, seeded):
        eng = seeded.engine
        eng.create_poll(seeded.alice.member_id, "language:es", "Q?", ["a", "b"])
        with pytest.raises(UnknownForum):
            eng.create_poll(seeded.alice.member_id, "language:de", "Q?", ["a", "b"])

    def test_option_validation(self, seeded):
        eng = seeded.engine
        with pytest.raises(TooFewOptions):
            eng.create_poll(seeded.alice.member_id, "global", "Q?", ["only"])
        with pytest.raises(BadOption):
            eng.create_poll(seeded.alice.member_id, "global", "Q?", ["a", "a"])
        with pytest.raises(EmptyText):
            eng.create_poll(seeded.alice.member_id, "global", "  ", ["a", "b"])
        poll = eng.create_poll(seeded.alice.member_id, "global", "Q?", ["a", "b"])
        with pytest.raises(BadOption):
            eng.vote(poll.poll_id, seeded.bob.member_id, 2)
        with pytest.raises(BadOption):
            eng.vote(poll.poll_id, seeded.bob.member_id, True)

    def test_close_enforced_by_timestamp(self, seeded):
        eng = seeded.engine
        tick = [100.0]
        eng.clock = lambda: tick[0]
        poll = eng.create_poll(
            seeded.alice.member_id, "global", "Q?", ["a", "b"], closes_at=150.0
        )
        eng.vote(poll.poll_id, seeded.bob.member_id, 0)
        tick[0] = 151.0
        with pytest.raises(PollClosed):
            eng.vote(poll.poll_id, seeded.alice.member_id, 1)
        assert eng.tally(poll.poll_id)["counts"] == [1, 0]


class TestGlossary:
    def test_term_with_regional_variants(self, seeded):
        eng = seeded.engine
        eng.add_term(seeded.alice.member_id, "computer", "The machine running this site")
        eng.add_term_translation(
            seeded.alice.member_id, "computer", "es", "ordenador", regional_note="Spain"
        )
        eng.add_term_translation(
            seeded.bob.member_id, "computer", "es", "computadora", regional_note="Puerto Rico"
        )
        entry = eng.get_term("computer")
        assert [(t.text, t.regional_note) for t in entry.translations] == [
            ("ordenador", "Spain"),
            ("computadora", "Puerto Rico"),
        ]

    def test_duplicate_term_case_insensitive(self, seeded):
        eng = seeded.engine
        eng.add_term(seeded.alice.member_id, "Widget", "a thing")
        with pytest.raises(DuplicateTerm):
            eng.add_term(seeded.bob.member_id, "widget", "the same thing")

    def test_term_comments(self, seeded):
        eng = seeded.engine
        eng.add_term(seeded.alice.member_id, "widget", "a thing")
        post = eng.comment_on_term(seeded.bob.member_id, "widget", "Is this still used?")
        reply = eng.comment_on_term(
            seeded.alice.member_id, "widget", "Yes, everywhere", reply_to=post.post_id
        )
        assert reply.reply_to == post.post_id
        with pytest.raises(BadReplyRef):
            eng.comment_on_term(seeded.bob.member_id, "widget", "x", reply_to="po-999999")

    def test_unknown_term(self, seeded):
        with pytest.raises(UnknownTerm):
            seeded.engine.get_term("missing")
        with pytest.raises(UnknownTerm):
            seeded.engine.add_term_translation(
                seeded.alice.member_id, "missing", "es", "x", None
            )

    def test_listing_sorted(self, seeded):
        eng = seeded.engine
        eng.add_term(seeded.alice.member_id, "zebra", "d1")
        eng.add_term(seeded.alice.member_id, "Apple", "d2")
        assert [e.term for e in eng.list_terms()] == ["Apple", "zebra"]


class TestDirectory:
    def test_optin_listing_and_optout(self, seeded):
        eng = seeded.engine
        eng.submit_translation(seeded.alice.member_id, seeded.items[0].item_id, "es", "x")
        eng.directory_optin(seeded.alice.member_id, "alice@example.org")
        entries = eng.list_directory()
        assert len(entries) == 1
        assert entries[0].display_name == "alice"
        assert entries[0].contact == "alice@example.org"
        assert entries[0].translated_count == 1
        eng.directory_optout(seeded.alice.member_id)
        assert eng.list_directory() == []

    def test_optin_requires_contact(self, seeded):
        with pytest.raises(EmptyText):
            seeded.engine.directory_optin(seeded.alice.member_id, "   ")

    def test_optout_without_optin_is_noop(self, seeded):
        seeded.engine.directory_optout(seeded.bob.member_id)
        assert seeded.engine.list_directory() == []
