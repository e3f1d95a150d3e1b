"""Languages, translatable items, and page ingestion.

Items enter the catalog from page sources in which translatable spans are
delimited with ``⟦t:CATEGORY⟧ ... ⟦/t⟧`` markers (U+27E6/U+27E7).  Each span
becomes one :class:`SourceItem` keyed ``page_id#ordinal``, carrying a context
excerpt of the surrounding page text.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import (
    DuplicateLanguage,
    EmptySpan,
    MalformedTag,
    UnbalancedMarker,
    UnknownItem,
    UnknownLanguage,
    UnknownPage,
)

CATEGORIES = ("menu-link", "heading", "informational-text", "button", "other")

DEFAULT_CONTEXT_WINDOW = 120

# Copy-paste palette for Spanish orthography: accented vowels, diaeresis,
# enye, and the inverted punctuation marks, in both cases.
SPANISH_PALETTE = list("áéíóúüñÁÉÍÓÚÜÑ¿¡")

_TAG_RE = re.compile(r"^([A-Za-z]{2,3})(?:-([A-Za-z]{2}|[0-9]{3}))?$")

_MARKER_RE = re.compile(r"⟦t:([^⟦⟧]*)⟧|⟦/t⟧")


def normalize_tag(code: str) -> str:
    """Validate and case-normalize a language tag ("es", "es-PR", "es-419").

    Raises MalformedTag for anything that is not a bare language subtag with
    an optional region.
    """
    m = _TAG_RE.match(code or "")
    if m is None:
        raise MalformedTag(f"malformed language tag: {code!r}")
    language, region = m.groups()
    tag = language.lower()
    if region is not None:
        tag += "-" + region.upper()
    return tag


def default_palette(tag: str) -> list[str]:
    """Shipped character palette for a language tag (empty when none known)."""
    if tag == "es" or tag.startswith("es-"):
        return list(SPANISH_PALETTE)
    return []


@dataclass
class LanguageProfile:
    code: str
    display_name: str
    character_palette: list[str] = field(default_factory=list)
    enabled: bool = True

    def to_dict(self) -> dict:
        return {
            "code": self.code,
            "display_name": self.display_name,
            "character_palette": list(self.character_palette),
            "enabled": self.enabled,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "LanguageProfile":
        return cls(
            code=d["code"],
            display_name=d["display_name"],
            character_palette=list(d["character_palette"]),
            enabled=d["enabled"],
        )


@dataclass
class ContextSnippet:
    """Excerpt of the originating page; ``snippet[start:end]`` is the item."""

    snippet: str
    start: int
    end: int
    full_page_ref: str

    def to_dict(self) -> dict:
        return {
            "snippet": self.snippet,
            "start": self.start,
            "end": self.end,
            "full_page_ref": self.full_page_ref,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "ContextSnippet":
        return cls(d["snippet"], d["start"], d["end"], d["full_page_ref"])


@dataclass
class SourceItem:
    item_id: str
    key: str
    source_text: str
    page_id: str
    category: str
    context: ContextSnippet
    view_count: int = 0

    def to_dict(self) -> dict:
        return {
            "item_id": self.item_id,
            "key": self.key,
            "source_text": self.source_text,
            "page_id": self.page_id,
            "category": self.category,
            "context": self.context.to_dict(),
            "view_count": self.view_count,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "SourceItem":
        return cls(
            item_id=d["item_id"],
            key=d["key"],
            source_text=d["source_text"],
            page_id=d["page_id"],
            category=d["category"],
            context=ContextSnippet.from_dict(d["context"]),
            view_count=d["view_count"],
        )


@dataclass
class _Span:
    text: str
    category: str
    start: int  # offset in the marker-stripped page text
    end: int


def extract_spans(page_source: str) -> tuple[str, list[_Span]]:
    """Parse marker-delimited spans out of a page source.

    Returns the page text with all markers removed plus the spans with their
    offsets into that stripped text, in document order.  Nested or unpaired
    markers raise UnbalancedMarker; empty (or whitespace-only) spans raise
    EmptySpan.
    """
    clean_parts: list[str] = []
    clean_len = 0
    spans: list[_Span] = []
    pos = 0
    open_at: int | None = None
    open_category = ""
    for m in _MARKER_RE.finditer(page_source):
        segment = page_source[pos : m.start()]
        clean_parts.append(segment)
        clean_len += len(segment)
        pos = m.end()
        if m.group(0).startswith("⟦t:"):
            if open_at is not None:
                raise UnbalancedMarker("nested opening marker")
            open_at = clean_len
            open_category = m.group(1)
        else:
            if open_at is None:
                raise UnbalancedMarker("closing marker without an open span")
            text = "".join(clean_parts)[open_at:clean_len]
            if not text.strip():
                raise EmptySpan("marked span is empty")
            category = open_category if open_category in CATEGORIES else "other"
            spans.append(_Span(text=text, category=category, start=open_at, end=clean_len))
            open_at = None
    if open_at is not None:
        raise UnbalancedMarker("opening marker never closed")
    clean_parts.append(page_source[pos:])
    return "".join(clean_parts), spans


def make_context(clean: str, span: _Span, page_id: str, window: int) -> ContextSnippet:
    lo = max(0, span.start - window)
    hi = min(len(clean), span.end + window)
    return ContextSnippet(
        snippet=clean[lo:hi],
        start=span.start - lo,
        end=span.end - lo,
        full_page_ref=page_id,
    )


class CatalogStore:
    """Registered languages plus the ordered item collection.

    Item insertion order is the export order.  Re-ingesting a page replaces
    its items in bulk: an item keeps its id (and view count) only when both
    key and source text are unchanged.
    """

    def __init__(self, source_language: str = "en"):
        self.source_language = source_language
        self.languages: dict[str, LanguageProfile] = {}
        self.items: dict[str, SourceItem] = {}
        self._key_index: dict[str, str] = {}
        self._item_seq = 0

    # -- languages ----------------------------------------------------------

    def register_language(
        self,
        code: str,
        display_name: str,
        palette: list[str] | None = None,
        enabled: bool = True,
    ) -> LanguageProfile:
        tag = normalize_tag(code)
        if tag in self.languages:
            raise DuplicateLanguage(f"language already registered: {tag}")
        if palette is None:
            palette = default_palette(tag)
        deduped: list[str] = []
        for ch in palette:
            if ch not in deduped:
                deduped.append(ch)
        profile = LanguageProfile(
            code=tag, display_name=display_name, character_palette=deduped, enabled=enabled
        )
        self.languages[tag] = profile
        return profile

    def require_language(self, code: str) -> LanguageProfile:
        tag = normalize_tag(code)
        profile = self.languages.get(tag)
        if profile is None:
            raise UnknownLanguage(f"language not registered: {tag}")
        return profile

    def list_languages(self) -> list[LanguageProfile]:
        return [self.languages[tag] for tag in sorted(self.languages)]

    # -- items --------------------------------------------------------------

    def next_item_id(self) -> str:
        self._item_seq += 1
        return f"i-{self._item_seq:06d}"

    def get_item(self, item_id: str) -> SourceItem:
        item = self.items.get(item_id)
        if item is None:
            raise UnknownItem(f"no such item: {item_id}")
        return item

    def item_by_key(self, key: str) -> SourceItem | None:
        item_id = self._key_index.get(key)
        return self.items.get(item_id) if item_id is not None else None

    def page_ids(self) -> list[str]:
        seen: list[str] = []
        for item in self.items.values():
            if item.page_id not in seen:
                seen.append(item.page_id)
        return seen

    def items_for_page(self, page_id: str) -> list[SourceItem]:
        found = [item for item in self.items.values() if item.page_id == page_id]
        if not found:
            raise UnknownPage(f"no items for page: {page_id}")
        return found

    def ingest(self, page_id: str, page_source: str, window: int) -> list[SourceItem]:
        """Replace the page's items with the spans marked in ``page_source``."""
        clean, spans = extract_spans(page_source)
        old_items = [item for item in self.items.values() if item.page_id == page_id]
        new_items: list[SourceItem] = []
        for ordinal, span in enumerate(spans):
            key = f"{page_id}#{ordinal}"
            context = make_context(clean, span, page_id, window)
            existing = self.item_by_key(key)
            if existing is not None and existing.source_text == span.text:
                existing.category = span.category
                existing.context = context
                new_items.append(existing)
            else:
                new_items.append(
                    SourceItem(
                        item_id=self.next_item_id(),
                        key=key,
                        source_text=span.text,
                        page_id=page_id,
                        category=span.category,
                        context=context,
                    )
                )
        for item in old_items:
            del self.items[item.item_id]
            del self._key_index[item.key]
        for item in new_items:
            self.items[item.item_id] = item
            self._key_index[item.key] = item.item_id
        return new_items

    def add_imported_item(
        self, key: str, source_text: str, page_id: str, category: str, start: int
    ) -> SourceItem:
        """Create an item from an exchange-file record without page context.

        The snippet is reconstructed as the item text padded to the recorded
        start offset, so offsets survive an export/import cycle byte-for-byte.
        """
        item = SourceItem(
            item_id=self.next_item_id(),
            key=key,
            source_text=source_text,
            page_id=page_id,
            category=category,
            context=ContextSnippet(
                snippet=" " * start + source_text,
                start=start,
                end=start + len(source_text),
                full_page_ref=page_id,
            ),
        )
        self.items[item.item_id] = item
        self._key_index[key] = item.item_id
        return item

    # -- persistence --------------------------------------------------------

    def state_dict(self) -> dict:
        return {
            "source_language": self.source_language,
            "languages": [self.languages[tag].to_dict() for tag in self.languages],
            "items": [item.to_dict() for item in self.items.values()],
            "item_seq": self._item_seq,
        }

    def load_state(self, d: dict) -> None:
        self.source_language = d["source_language"]
        self.languages = {}
        for profile_dict in d["languages"]:
            profile = LanguageProfile.from_dict(profile_dict)
            self.languages[profile.code] = profile
        self.items = {}
        self._key_index = {}
        for item_dict in d["items"]:
            item = SourceItem.from_dict(item_dict)
            self.items[item.item_id] = item
            self._key_index[item.key] = item.item_id
        self._item_seq = d["item_seq"]
