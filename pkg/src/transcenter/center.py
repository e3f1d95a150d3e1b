"""The translation center engine.

All state lives in per-subsystem stores; every mutation flows through one
journaled command so that snapshot-plus-replay reproduces exactly the state
any acknowledged mutation observed.  Commands carry their own timestamps
(and any other nondeterministic inputs) in the payload, which keeps replay
deterministic.  A single mutex linearizes mutations; reads take it briefly
to see a consistent snapshot.
"""

from __future__ import annotations

import threading
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable

from . import po
from .catalog import CatalogStore, SourceItem, normalize_tag
from .community import (
    CommunityStore,
    DirectoryEntry,
    GlossaryEntry,
    Poll,
    Post,
    Thread,
    normalize_forum,
    normalize_poll_scope,
)
from .config import EngineConfig
from .errors import (
    AuthFailed,
    BadPageId,
    EmptyComment,
    UnknownLanguage,
    UnknownTarget,
)
from .members import Member, MemberStore, hash_credential, verify_credential
from .priority import ItemStats, PriorityScore, PriorityWeights, build_worklist, pick_random
from .progress import ProgressMeter, compute_meter
from .review import RatingAggregate, ReviewRecord, ReviewStore
from .rubric import EvaluationRecord, RubricReport, RubricStore, report as build_rubric_report
from .store import StoreDir
from .workflow import (
    Binder,
    Notification,
    Translation,
    TranslationComment,
    TranslationRequest,
    WorkflowStore,
)

IMPORT_AUTHOR = "importer"

_OP_KIND = {
    "register_language": "catalog",
    "ingest_page": "catalog",
    "import_catalog": "catalog",
    "record_view": "catalog",
    "submit_translation": "workflow",
    "edit_translation": "workflow",
    "add_comment": "workflow",
    "request_translation": "workflow",
    "mark_notifications_read": "workflow",
    "rate_translation": "review",
    "create_thread": "community",
    "reply": "community",
    "create_poll": "community",
    "vote": "community",
    "add_term": "community",
    "add_term_translation": "community",
    "comment_on_term": "community",
    "directory_optin": "community",
    "directory_optout": "community",
    "record_evaluation": "rubric",
    "register_member": "service",
}


@dataclass
class MergeReport:
    added: int = 0
    updated: int = 0
    unchanged: int = 0
    conflicts: list[dict] = field(default_factory=list)

    @property
    def conflict_count(self) -> int:
        return len(self.conflicts)


class TranslationCenter:
    """Engine facade over all subsystem stores."""

    def __init__(
        self,
        config: EngineConfig | None = None,
        store: StoreDir | None = None,
        source_language: str = "en",
        clock: Callable[[], float] = time.time,
    ):
        self.config = config or EngineConfig()
        self.clock = clock
        self.catalog = CatalogStore(source_language=source_language)
        self.workflow = WorkflowStore()
        self.reviews = ReviewStore()
        self.community = CommunityStore()
        self.rubric = RubricStore()
        self.members = MemberStore()
        self._store = store
        self._seq = 0
        self._mutex = threading.Lock()
        self._replaying = False
        self._handlers = {
            "register_language": self._do_register_language,
            "ingest_page": self._do_ingest_page,
            "import_catalog": self._do_import_catalog,
            "record_view": self._do_record_view,
            "submit_translation": self._do_submit_translation,
            "edit_translation": self._do_edit_translation,
            "add_comment": self._do_add_comment,
            "request_translation": self._do_request_translation,
            "mark_notifications_read": self._do_mark_notifications_read,
            "rate_translation": self._do_rate_translation,
            "create_thread": self._do_create_thread,
            "reply": self._do_reply,
            "create_poll": self._do_create_poll,
            "vote": self._do_vote,
            "add_term": self._do_add_term,
            "add_term_translation": self._do_add_term_translation,
            "comment_on_term": self._do_comment_on_term,
            "directory_optin": self._do_directory_optin,
            "directory_optout": self._do_directory_optout,
            "record_evaluation": self._do_record_evaluation,
            "register_member": self._do_register_member,
        }

    # -- lifecycle -----------------------------------------------------------

    @classmethod
    def open(
        cls,
        store_dir: str | Path,
        config: EngineConfig | None = None,
        source_language: str = "en",
    ) -> "TranslationCenter":
        """Open (or create) a durable store and recover its state."""
        store = StoreDir(store_dir)
        engine = cls(config=config, store=store, source_language=source_language)
        snapshot = store.read_snapshot()
        if snapshot is not None:
            engine._seq, state = snapshot
            engine._load_state(state)
        engine._replaying = True
        try:
            for entry in store.read_entries(after_seq=engine._seq):
                if entry["seq"] != engine._seq + 1:
                    raise RuntimeError(
                        f"journal gap: expected seq {engine._seq + 1}, found {entry['seq']}"
                    )
                engine._handlers[entry["op"]](entry["payload"])
                engine._seq = entry["seq"]
        finally:
            engine._replaying = False
        return engine

    def close(self) -> None:
        if self._store is not None:
            with self._mutex:
                self._store.write_snapshot(self._seq, self._state_dict())
                self._store.close()
            self._store = None

    @property
    def store(self) -> StoreDir | None:
        return self._store

    @property
    def source_language(self) -> str:
        return self.catalog.source_language

    def _now(self) -> float:
        return self.clock()

    def _commit(self, op: str, payload: dict):
        with self._mutex:
            result = self._handlers[op](payload)
            self._seq += 1
            if self._store is not None:
                self._store.append(
                    {
                        "seq": self._seq,
                        "kind": _OP_KIND[op],
                        "op": op,
                        "payload": payload,
                        "ts": payload.get("ts"),
                    }
                )
                if self._seq % self.config.snapshot_interval == 0:
                    self._store.write_snapshot(self._seq, self._state_dict())
            return result

    def _state_dict(self) -> dict:
        return {
            "catalog": self.catalog.state_dict(),
            "workflow": self.workflow.state_dict(),
            "reviews": self.reviews.state_dict(),
            "community": self.community.state_dict(),
            "rubric": self.rubric.state_dict(),
            "members": self.members.state_dict(),
        }

    def _load_state(self, state: dict) -> None:
        self.catalog.load_state(state["catalog"])
        self.workflow.load_state(state["workflow"])
        self.reviews.load_state(state["reviews"])
        self.community.load_state(state["community"])
        self.rubric.load_state(state["rubric"])
        self.members.load_state(state["members"])

    # -- catalog commands ----------------------------------------------------

    def register_language(
        self,
        code: str,
        display_name: str | None = None,
        palette: list[str] | None = None,
        enabled: bool = True,
    ):
        payload = {
            "code": code,
            "display_name": display_name,
            "palette": palette,
            "enabled": bool(enabled),
            "ts": self._now(),
        }
        return self._commit("register_language", payload)

    def _do_register_language(self, p: dict):
        display_name = p["display_name"]
        if display_name is None or not str(display_name).strip():
            display_name = normalize_tag(p["code"])
        return self.catalog.register_language(
            p["code"], display_name, palette=p["palette"], enabled=p["enabled"]
        )

    def ingest_page(self, page_id: str, page_source: str) -> list[SourceItem]:
        if not page_id or any(ch in page_id for ch in "#\n\r\t"):
            raise BadPageId(f"page id must be non-empty without '#' or whitespace controls: {page_id!r}")
        payload = {
            "page_id": page_id,
            "source": page_source,
            "window": self.config.context_window,
            "ts": self._now(),
        }
        return self._commit("ingest_page", payload)

    def _do_ingest_page(self, p: dict) -> list[SourceItem]:
        return self.catalog.ingest(p["page_id"], p["source"], p["window"])

    def import_catalog(self, data: bytes | str) -> MergeReport:
        text = po.decode(data) if isinstance(data, bytes) else data
        payload = {"text": text, "ts": self._now()}
        return self._commit("import_catalog", payload)

    def _do_import_catalog(self, p: dict) -> MergeReport:
        parsed = po.parse(p["text"])
        if parsed.language == self.catalog.source_language:
            language = None
        else:
            language = self.catalog.require_language(parsed.language).code
        report = MergeReport()
        for record in parsed.records:
            existing = self.catalog.item_by_key(record.key)
            incoming = record.translation if record.translation.strip() else ""
            if existing is None:
                item = self.catalog.add_imported_item(
                    key=record.key,
                    source_text=record.source_text,
                    page_id=record.page_id,
                    category=record.category,
                    start=record.start,
                )
                if language is not None and incoming:
                    self._apply_translation(item, language, incoming, IMPORT_AUTHOR, p["ts"], None)
                report.added += 1
                continue
            if existing.source_text != record.source_text:
                report.conflicts.append({"key": record.key, "reason": "source text differs"})
                continue
            if language is None or not incoming:
                report.unchanged += 1
                continue
            current = self.workflow.find_translation(existing.item_id, language)
            if current is None:
                self._apply_translation(existing, language, incoming, IMPORT_AUTHOR, p["ts"], None)
                report.updated += 1
            elif current.current_text == incoming:
                report.unchanged += 1
            else:
                report.conflicts.append({"key": record.key, "reason": "translation differs"})
        return report

    def record_view(self, item_id: str, count: int = 1) -> int:
        count = int(count)
        if count < 1:
            raise ValueError("view count increment must be >= 1")
        payload = {"item_id": item_id, "count": count, "ts": self._now()}
        return self._commit("record_view", payload)

    def _do_record_view(self, p: dict) -> int:
        item = self.catalog.get_item(p["item_id"])
        item.view_count += p["count"]
        return item.view_count

    # -- workflow commands ---------------------------------------------------

    def submit_translation(
        self, member_id: str, item_id: str, language: str, text: str, note: str | None = None
    ) -> Translation:
        payload = {
            "member_id": member_id,
            "item_id": item_id,
            "language": language,
            "text": text,
            "note": note,
            "ts": self._now(),
        }
        return self._commit("submit_translation", payload)

    def _do_submit_translation(self, p: dict) -> Translation:
        self.members.require(p["member_id"])
        item = self.catalog.get_item(p["item_id"])
        language = self.catalog.require_language(p["language"]).code
        return self._apply_translation(
            item, language, p["text"], p["member_id"], p["ts"], p["note"]
        )

    def _apply_translation(
        self,
        item: SourceItem,
        language: str,
        text: str,
        author: str,
        ts: float,
        note: str | None,
    ) -> Translation:
        """Create version 1 for (item, language) and fulfill covering requests."""
        translation = self.workflow.create_translation(
            item.item_id, language, text, author, ts, note
        )
        author_handle = self.members.handle_of(author)
        for request in self.workflow.requests_covering(item.item_id, item.page_id):
            self.workflow.record_fulfillment(request, item.key, language, author_handle, ts)
        return translation

    def edit_translation(
        self,
        member_id: str,
        item_id: str,
        language: str,
        base_version: int,
        text: str,
        note: str | None = None,
    ) -> Translation:
        payload = {
            "member_id": member_id,
            "item_id": item_id,
            "language": language,
            "base_version": base_version,
            "text": text,
            "note": note,
            "ts": self._now(),
        }
        return self._commit("edit_translation", payload)

    def _do_edit_translation(self, p: dict) -> Translation:
        self.members.require(p["member_id"])
        language = normalize_tag(p["language"])
        return self.workflow.edit_translation(
            p["item_id"], language, p["base_version"], p["text"], p["member_id"], p["ts"], p["note"]
        )

    def add_comment(
        self, member_id: str, item_id: str, language: str, body: str
    ) -> TranslationComment:
        payload = {
            "member_id": member_id,
            "item_id": item_id,
            "language": language,
            "body": body,
            "ts": self._now(),
        }
        return self._commit("add_comment", payload)

    def _do_add_comment(self, p: dict) -> TranslationComment:
        self.members.require(p["member_id"])
        language = normalize_tag(p["language"])
        self.workflow.get_translation(p["item_id"], language)
        if not isinstance(p["body"], str) or not p["body"].strip():
            raise EmptyComment("comment body must be non-empty")
        crosspost_ref = self._crosspost(p["item_id"], language, p["member_id"], p["body"], p["ts"])
        return self.workflow.add_comment(
            p["item_id"], language, p["member_id"], p["body"], p["ts"], crosspost_ref
        )

    def _crosspost(
        self, item_id: str, language: str, member_id: str, body: str, ts: float
    ) -> dict:
        """Mirror a translation comment into the language forum's bound thread."""
        key = self.community.crosspost_key(item_id, language)
        thread_id = self.community.crosspost_threads.get(key)
        item = self.catalog.items.get(item_id)
        title = item.key if item is not None else item_id
        if thread_id is None:
            thread = self.community.create_thread(
                forum=f"language:{language}", author=member_id, title=title, body=body, timestamp=ts
            )
            self.community.crosspost_threads[key] = thread.thread_id
            return {"thread_id": thread.thread_id, "post_id": thread.posts[0].post_id}
        post = self.community.reply(thread_id, member_id, body, ts, None)
        return {"thread_id": thread_id, "post_id": post.post_id}

    def request_translation(self, member_id: str, target: str) -> TranslationRequest:
        payload = {"member_id": member_id, "target": target, "ts": self._now()}
        return self._commit("request_translation", payload)

    def _do_request_translation(self, p: dict) -> TranslationRequest:
        self.members.require(p["member_id"])
        target = p["target"]
        if target in self.catalog.items:
            kind = "item"
        elif any(item.page_id == target for item in self.catalog.items.values()):
            kind = "page"
        else:
            raise UnknownTarget(f"no item or page named {target!r}")
        return self.workflow.create_request(p["member_id"], kind, target, p["ts"])

    def mark_notifications_read(self, member_id: str, ids: list[str] | None = None) -> int:
        payload = {"member_id": member_id, "ids": ids, "ts": self._now()}
        return self._commit("mark_notifications_read", payload)

    def _do_mark_notifications_read(self, p: dict) -> int:
        self.members.require(p["member_id"])
        return self.workflow.mark_read(p["member_id"], p["ids"])

    # -- review commands -----------------------------------------------------

    def rate_translation(
        self, member_id: str, item_id: str, language: str, rating: int, body: str | None = None
    ) -> ReviewRecord:
        payload = {
            "member_id": member_id,
            "item_id": item_id,
            "language": language,
            "rating": rating,
            "body": body,
            "ts": self._now(),
        }
        return self._commit("rate_translation", payload)

    def _do_rate_translation(self, p: dict) -> ReviewRecord:
        self.members.require(p["member_id"])
        language = normalize_tag(p["language"])
        translation = self.workflow.get_translation(p["item_id"], language)
        return self.reviews.rate(
            reviewer=p["member_id"],
            item_id=p["item_id"],
            language=language,
            current_version=translation.version,
            current_author=translation.current_author,
            rating=p["rating"],
            body=p["body"],
            timestamp=p["ts"],
        )

    # -- community commands --------------------------------------------------

    def create_thread(self, forum: str, member_id: str, title: str, body: str) -> Thread:
        payload = {
            "forum": forum,
            "member_id": member_id,
            "title": title,
            "body": body,
            "ts": self._now(),
        }
        return self._commit("create_thread", payload)

    def _do_create_thread(self, p: dict) -> Thread:
        self.members.require(p["member_id"])
        forum = normalize_forum(p["forum"], set(self.catalog.languages))
        return self.community.create_thread(forum, p["member_id"], p["title"], p["body"], p["ts"])

    def reply(
        self, thread_id: str, member_id: str, body: str, reply_to: str | None = None
    ) -> Post:
        payload = {
            "thread_id": thread_id,
            "member_id": member_id,
            "body": body,
            "reply_to": reply_to,
            "ts": self._now(),
        }
        return self._commit("reply", payload)

    def _do_reply(self, p: dict) -> Post:
        self.members.require(p["member_id"])
        return self.community.reply(p["thread_id"], p["member_id"], p["body"], p["ts"], p["reply_to"])

    def create_poll(
        self,
        member_id: str,
        scope: str,
        question: str,
        options: list[str],
        closes_at: float | None = None,
    ) -> Poll:
        payload = {
            "member_id": member_id,
            "scope": scope,
            "question": question,
            "options": list(options),
            "closes_at": closes_at,
            "ts": self._now(),
        }
        return self._commit("create_poll", payload)

    def _do_create_poll(self, p: dict) -> Poll:
        self.members.require(p["member_id"])
        scope = normalize_poll_scope(p["scope"], set(self.catalog.languages))
        return self.community.create_poll(
            p["member_id"], scope, p["question"], p["options"], p["closes_at"], p["ts"]
        )

    def vote(self, poll_id: str, member_id: str, option_index: int) -> dict:
        payload = {
            "poll_id": poll_id,
            "member_id": member_id,
            "option_index": option_index,
            "ts": self._now(),
        }
        return self._commit("vote", payload)

    def _do_vote(self, p: dict) -> dict:
        self.members.require(p["member_id"])
        self.community.vote(p["poll_id"], p["member_id"], p["option_index"], p["ts"])
        return self.community.tally(p["poll_id"])

    def add_term(self, member_id: str, term: str, definition: str) -> GlossaryEntry:
        payload = {"member_id": member_id, "term": term, "definition": definition, "ts": self._now()}
        return self._commit("add_term", payload)

    def _do_add_term(self, p: dict) -> GlossaryEntry:
        self.members.require(p["member_id"])
        return self.community.add_term(p["member_id"], p["term"], p["definition"], p["ts"])

    def add_term_translation(
        self,
        member_id: str,
        term: str,
        language: str,
        text: str,
        regional_note: str | None = None,
    ) -> GlossaryEntry:
        payload = {
            "member_id": member_id,
            "term": term,
            "language": language,
            "text": text,
            "regional_note": regional_note,
            "ts": self._now(),
        }
        return self._commit("add_term_translation", payload)

    def _do_add_term_translation(self, p: dict) -> GlossaryEntry:
        self.members.require(p["member_id"])
        return self.community.add_term_translation(
            p["member_id"], p["term"], p["language"], p["text"], p["regional_note"], p["ts"]
        )

    def comment_on_term(
        self, member_id: str, term: str, body: str, reply_to: str | None = None
    ) -> Post:
        payload = {
            "member_id": member_id,
            "term": term,
            "body": body,
            "reply_to": reply_to,
            "ts": self._now(),
        }
        return self._commit("comment_on_term", payload)

    def _do_comment_on_term(self, p: dict) -> Post:
        self.members.require(p["member_id"])
        return self.community.comment_on_term(
            p["member_id"], p["term"], p["body"], p["ts"], p["reply_to"]
        )

    def directory_optin(self, member_id: str, contact: str) -> None:
        payload = {"member_id": member_id, "contact": contact, "ts": self._now()}
        return self._commit("directory_optin", payload)

    def _do_directory_optin(self, p: dict) -> None:
        self.members.require(p["member_id"])
        self.community.optin(p["member_id"], p["contact"])

    def directory_optout(self, member_id: str) -> None:
        payload = {"member_id": member_id, "ts": self._now()}
        return self._commit("directory_optout", payload)

    def _do_directory_optout(self, p: dict) -> None:
        self.members.require(p["member_id"])
        self.community.optout(p["member_id"])

    # -- rubric commands -----------------------------------------------------

    def record_evaluation(
        self,
        page_label: str,
        language: str,
        method: str,
        judgments: dict[str, int] | None,
        evaluator: str,
    ) -> EvaluationRecord:
        payload = {
            "page_label": page_label,
            "language": language,
            "method": method,
            "judgments": judgments,
            "evaluator": evaluator,
            "ts": self._now(),
        }
        return self._commit("record_evaluation", payload)

    def _do_record_evaluation(self, p: dict) -> EvaluationRecord:
        self.members.require(p["evaluator"])
        return self.rubric.record(
            p["page_label"], p["language"], p["method"], p["judgments"], p["evaluator"], p["ts"]
        )

    # -- member commands -----------------------------------------------------

    def register_member(self, handle: str, credential: str) -> Member:
        payload = {"handle": handle, "verifier": hash_credential(credential), "ts": self._now()}
        return self._commit("register_member", payload)

    def _do_register_member(self, p: dict) -> Member:
        return self.members.register(p["handle"], p["verifier"], p["ts"])

    def authenticate(self, handle: str, credential: str) -> Member:
        with self._mutex:
            member = self.members.by_handle(handle)
        if member is None or not verify_credential(credential, member.credential):
            raise AuthFailed("unknown handle or wrong credential")
        return member

    # -- reads ---------------------------------------------------------------

    def list_languages(self):
        with self._mutex:
            return self.catalog.list_languages()

    def get_item(self, item_id: str) -> SourceItem:
        with self._mutex:
            return self.catalog.get_item(item_id)

    def _filtered_items(
        self, language: str | None, flt: str, page: str | None = None
    ) -> list[SourceItem]:
        if flt not in ("all", "untranslated-only", "untranslated"):
            # a filter token that is not a keyword names a page
            if page is None:
                page = flt
            flt = "all"
        if page is not None:
            items = self.catalog.items_for_page(page)
        else:
            items = list(self.catalog.items.values())
        if flt != "all":
            if language is None:
                raise UnknownLanguage("the untranslated filter needs a language")
            tag = self.catalog.require_language(language).code
            items = [
                item for item in items if not self.workflow.is_translated(item.item_id, tag)
            ]
        return items

    def list_items(
        self, language: str | None = None, flt: str = "all", page: str | None = None
    ) -> list[SourceItem]:
        with self._mutex:
            if language is not None:
                self.catalog.require_language(language)
            return self._filtered_items(language, flt, page)

    def item_overview(
        self, language: str | None = None, flt: str = "all", page: str | None = None
    ) -> list[tuple[SourceItem, ItemStats | None]]:
        """Items plus per-language status, for listings."""
        with self._mutex:
            tag = self.catalog.require_language(language).code if language else None
            items = self._filtered_items(tag, flt, page)
            return [(item, self.item_stats(item, tag) if tag else None) for item in items]

    def item_detail(
        self, item_id: str, language: str | None = None
    ) -> tuple[SourceItem, ItemStats | None, Translation | None]:
        with self._mutex:
            item = self.catalog.get_item(item_id)
            if language is None:
                return item, None, None
            tag = self.catalog.require_language(language).code
            return item, self.item_stats(item, tag), self.workflow.find_translation(item_id, tag)

    def member_handle(self, member_id: str) -> str:
        return self.members.handle_of(member_id)

    def item_stats(self, item: SourceItem, language: str) -> ItemStats:
        translated = self.workflow.is_translated(item.item_id, language)
        aggregate = self.reviews.aggregate(item.item_id, language)
        return ItemStats(
            view_count=item.view_count,
            request_count=self.workflow.request_count_for(item.item_id, item.page_id),
            translated=translated,
            rating_mean=aggregate.mean if translated else None,
        )

    def build_worklist(
        self, language: str, flt: str = "all", weights: PriorityWeights | None = None
    ) -> list[tuple[SourceItem, PriorityScore]]:
        with self._mutex:
            tag = self.catalog.require_language(language).code
            items = self._filtered_items(tag, flt)
            if weights is None:
                weights = self.config.weights
            return build_worklist(items, tag, lambda item: self.item_stats(item, tag), weights)

    def pick_random(self, language: str, seed: int | None = None) -> SourceItem:
        if seed is None:
            seed = time.time_ns()
        with self._mutex:
            tag = self.catalog.require_language(language).code
            candidates = [
                item
                for item in self.catalog.items.values()
                if not self.workflow.is_translated(item.item_id, tag)
            ]
            return pick_random(candidates, seed)

    def export_catalog(self, language: str) -> str:
        with self._mutex:
            tag = normalize_tag(language)
            if tag == self.catalog.source_language:
                target = None
            else:
                target = self.catalog.require_language(tag).code
            records = []
            for item in self.catalog.items.values():
                translation = ""
                if target is not None:
                    existing = self.workflow.find_translation(item.item_id, target)
                    if existing is not None:
                        translation = existing.current_text
                records.append(
                    po.PoRecord(
                        page_id=item.page_id,
                        category=item.category,
                        start=item.context.start,
                        end=item.context.end,
                        key=item.key,
                        source_text=item.source_text,
                        translation=translation,
                    )
                )
            return po.render(tag, records)

    def get_translation(self, item_id: str, language: str) -> Translation:
        with self._mutex:
            return self.workflow.get_translation(item_id, normalize_tag(language))

    def rating_aggregate(self, item_id: str, language: str) -> RatingAggregate:
        with self._mutex:
            tag = normalize_tag(language)
            self.workflow.get_translation(item_id, tag)
            return self.reviews.aggregate(item_id, tag)

    def list_reviews(self, item_id: str, language: str) -> list[tuple[ReviewRecord, bool]]:
        with self._mutex:
            tag = normalize_tag(language)
            translation = self.workflow.get_translation(item_id, tag)
            return self.reviews.listing(item_id, tag, translation.version)

    def get_binder(self, member_id: str) -> Binder:
        with self._mutex:
            self.members.require(member_id)
            entries = self.workflow.authored_pairs(member_id)
            for entry in entries:
                item = self.catalog.items.get(entry.item_id)
                entry.item_key = item.key if item is not None else None
            entries.sort(key=lambda e: (e.item_id, e.language))
            requested = sorted(
                self.workflow.requests_for(member_id), key=lambda r: r.request_id
            )
            return Binder(member_id=member_id, translated=entries, requested=requested)

    def list_notifications(
        self, member_id: str, since: float | None = None, include_read: bool = False
    ) -> list[Notification]:
        with self._mutex:
            self.members.require(member_id)
            return self.workflow.notifications_for(member_id, since, include_read)

    def list_threads(self, forum: str) -> list[Thread]:
        with self._mutex:
            kind = normalize_forum(forum, set(self.catalog.languages))
            return self.community.threads_in(kind)

    def get_thread(self, thread_id: str) -> Thread:
        with self._mutex:
            return self.community.get_thread(thread_id)

    def list_polls(self) -> list[Poll]:
        with self._mutex:
            return list(self.community.polls.values())

    def tally(self, poll_id: str) -> dict:
        with self._mutex:
            return self.community.tally(poll_id)

    def list_terms(self) -> list[GlossaryEntry]:
        with self._mutex:
            return self.community.list_terms()

    def get_term(self, term: str) -> GlossaryEntry:
        with self._mutex:
            return self.community.get_term(term)

    def list_directory(self) -> list[DirectoryEntry]:
        with self._mutex:
            entries = []
            for member_id, contact in self.community.opted_in_members():
                entries.append(
                    DirectoryEntry(
                        member_id=member_id,
                        display_name=self.members.handle_of(member_id),
                        contact=contact,
                        opted_in=True,
                        translated_count=self.workflow.translated_count(member_id),
                    )
                )
            return entries

    def compute_meter(self, language: str, scope: str = "all") -> ProgressMeter:
        with self._mutex:
            tag = self.catalog.require_language(language).code
            if scope == "all":
                items = list(self.catalog.items.values())
            else:
                items = self.catalog.items_for_page(scope)
            return compute_meter(
                items, tag, scope, lambda item_id: self.workflow.is_translated(item_id, tag)
            )

    def list_evaluations(self) -> list[EvaluationRecord]:
        with self._mutex:
            return list(self.rubric.records)

    def rubric_report(self, group_by: str = "method") -> RubricReport:
        with self._mutex:
            return build_rubric_report(self.rubric.records, group_by)
