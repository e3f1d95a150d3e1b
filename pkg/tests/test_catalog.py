from __future__ import annotations

import pytest

from transcenter.catalog import (
    CatalogStore,
    default_palette,
    extract_spans,
    normalize_tag,
)
from transcenter.center import TranslationCenter
from transcenter.config import EngineConfig
from transcenter.errors import (
    BadPageId,
    DuplicateLanguage,
    EmptySpan,
    MalformedTag,
    UnbalancedMarker,
    UnknownItem,
    UnknownLanguage,
    UnknownPage,
)


class TestNormalizeTag:
    @pytest.mark.parametrize(
        "raw,expected",
        [
            ("es", "es"),
            ("ES", "es"),
            ("pt-br", "pt-BR"),
            ("PT-BR", "pt-BR"),
            ("es-419", "es-419"),
            ("ast", "ast"),
        ],
    )
    def test_normalizes(self, raw, expected):
        assert normalize_tag(raw) == expected

    @pytest.mark.parametrize(
        "raw", ["", "e", "english", "es_ES", "es-", "es-9", "es-catalonia", "12", "es-PR-x"]
    )
    def test_rejects_malformed(self, raw):
        with pytest.raises(MalformedTag):
            normalize_tag(raw)


class TestPalette:
    def test_spanish_variants_share_palette(self):
        assert "ñ" in default_palette("es")
        assert default_palette("es-PR") == default_palette("es")
        assert "¿" in default_palette("es-419")

    def test_other_languages_default_empty(self):
        assert default_palette("de") == []

    def test_custom_palette_deduped(self):
        store = CatalogStore()
        profile = store.register_language("de", "Deutsch", palette=["ä", "ö", "ä", "ß"])
        assert profile.character_palette == ["ä", "ö", "ß"]

    def test_duplicate_language(self):
        store = CatalogStore()
        store.register_language("es", "Español")
        with pytest.raises(DuplicateLanguage):
            store.register_language("ES", "Spanish again")


class TestExtractSpans:
    def test_basic_extraction(self):
        clean, spans = extract_spans("a ⟦t:button⟧Save⟦/t⟧ b")
        assert clean == "a Save b"
        assert [(s.text, s.category, s.start) for s in spans] == [("Save", "button", 2)]

    def test_unknown_category_becomes_other(self):
        _, spans = extract_spans("⟦t:sidebar⟧Hi⟦/t⟧")
        assert spans[0].category == "other"

    def test_nested_markers_rejected(self):
        with pytest.raises(UnbalancedMarker):
            extract_spans("⟦t:button⟧a ⟦t:heading⟧b⟦/t⟧ c⟦/t⟧")

    def test_orphan_close_rejected(self):
        with pytest.raises(UnbalancedMarker):
            extract_spans("plain ⟦/t⟧")

    def test_unclosed_open_rejected(self):
        with pytest.raises(UnbalancedMarker):
            extract_spans("⟦t:button⟧never closed")

    def test_empty_span_rejected(self):
        with pytest.raises(EmptySpan):
            extract_spans("⟦t:button⟧⟦/t⟧")
        with pytest.raises(EmptySpan):
            extract_spans("⟦t:button⟧   ⟦/t⟧")


class TestContext:
    def test_snippet_brackets_item(self, engine):
        items = engine.ingest_page("p", "before text ⟦t:heading⟧The Title⟦/t⟧ after text")
        ctx = items[0].context
        assert ctx.snippet[ctx.start : ctx.end] == "The Title"
        assert ctx.snippet == "before text The Title after text"
        assert ctx.full_page_ref == "p"

    def test_window_clips_long_pages(self):
        engine = TranslationCenter()
        left = "x" * 500
        right = "y" * 500
        items = engine.ingest_page("p", f"{left}⟦t:button⟧Mid⟦/t⟧{right}")
        ctx = items[0].context
        assert ctx.snippet == "x" * 120 + "Mid" + "y" * 120
        assert ctx.snippet[ctx.start : ctx.end] == "Mid"

    def test_window_configurable(self):
        engine = TranslationCenter(config=EngineConfig(context_window=5))
        items = engine.ingest_page("p", "aaaaaaaaaa⟦t:button⟧Mid⟦/t⟧bbbbbbbbbb")
        assert items[0].context.snippet == "aaaaaMidbbbbb"


class TestCatalogItems:
    def test_keys_and_order(self, engine):
        engine.ingest_page("p1", "⟦t:button⟧One⟦/t⟧ ⟦t:button⟧Two⟦/t⟧")
        engine.ingest_page("p2", "⟦t:button⟧Three⟦/t⟧")
        items = engine.list_items()
        assert [i.key for i in items] == ["p1#0", "p1#1", "p2#0"]
        assert [i.item_id for i in items] == ["i-000001", "i-000002", "i-000003"]

    def test_reingest_keeps_identity_when_unchanged(self, engine):
        [item] = engine.ingest_page("p", "⟦t:button⟧Stable⟦/t⟧")
        engine.record_view(item.item_id, 7)
        [again] = engine.ingest_page("p", "moved ⟦t:button⟧Stable⟦/t⟧ around")
        assert again.item_id == item.item_id
        assert again.view_count == 7
        assert again.context.snippet == "moved Stable around"

    def test_reingest_changed_text_gets_fresh_id(self, engine):
        [item] = engine.ingest_page("p", "⟦t:button⟧Old⟦/t⟧")
        [replacement] = engine.ingest_page("p", "⟦t:button⟧New⟦/t⟧")
        assert replacement.item_id != item.item_id
        with pytest.raises(UnknownItem):
            engine.get_item(item.item_id)

    def test_reingest_drops_removed_items(self, engine):
        engine.ingest_page("p", "⟦t:button⟧A⟦/t⟧ ⟦t:button⟧B⟦/t⟧")
        engine.ingest_page("p", "⟦t:button⟧A⟦/t⟧")
        assert [i.source_text for i in engine.list_items()] == ["A"]

    def test_unknown_page(self, engine):
        engine.ingest_page("p", "⟦t:button⟧A⟦/t⟧")
        with pytest.raises(UnknownPage):
            engine.list_items(page="nope")

    def test_bad_page_ids(self, engine):
        for bad in ("", "a#b", "a\tb", "a\nb"):
            with pytest.raises(BadPageId):
                engine.ingest_page(bad, "⟦t:button⟧A⟦/t⟧")

    def test_untranslated_filter_needs_language(self, seeded):
        with pytest.raises(UnknownLanguage):
            seeded.engine.list_items(flt="untranslated-only")

    def test_untranslated_filter(self, seeded):
        eng = seeded.engine
        eng.submit_translation(seeded.alice.member_id, seeded.items[0].item_id, "es", "Explora")
        remaining = eng.list_items(language="es", flt="untranslated-only")
        assert seeded.items[0].item_id not in [i.item_id for i in remaining]
        assert len(remaining) == len(seeded.items) - 1
