"""Versioned translation submission and editing, requests, and binders.

Translations are append-only: each edit adds a :class:`Revision` and bumps
the version by one under optimistic concurrency (an edit must name the
version it was based on; a mismatch is ``StaleVersion``).  Nothing is ever
deleted, so a member's binder can always be recomputed from history.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    AlreadyTranslated,
    DuplicateRequest,
    EmptyComment,
    EmptyText,
    StaleVersion,
    UnknownTranslation,
)


@dataclass
class Revision:
    text: str
    author: str
    timestamp: float
    note: str | None = None

    def to_dict(self) -> dict:
        return {"text": self.text, "author": self.author, "timestamp": self.timestamp, "note": self.note}

    @classmethod
    def from_dict(cls, d: dict) -> "Revision":
        return cls(d["text"], d["author"], d["timestamp"], d["note"])


@dataclass
class TranslationComment:
    author: str
    body: str
    timestamp: float
    crosspost_ref: dict | None = None  # {"thread_id": ..., "post_id": ...}

    def to_dict(self) -> dict:
        return {
            "author": self.author,
            "body": self.body,
            "timestamp": self.timestamp,
            "crosspost_ref": self.crosspost_ref,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "TranslationComment":
        return cls(d["author"], d["body"], d["timestamp"], d["crosspost_ref"])


@dataclass
class Translation:
    item_id: str
    language: str
    revisions: list[Revision] = field(default_factory=list)
    comments: list[TranslationComment] = field(default_factory=list)

    @property
    def version(self) -> int:
        return len(self.revisions)

    @property
    def current_text(self) -> str:
        return self.revisions[-1].text

    @property
    def current_author(self) -> str:
        return self.revisions[-1].author

    def to_dict(self) -> dict:
        return {
            "item_id": self.item_id,
            "language": self.language,
            "revisions": [r.to_dict() for r in self.revisions],
            "comments": [c.to_dict() for c in self.comments],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Translation":
        return cls(
            item_id=d["item_id"],
            language=d["language"],
            revisions=[Revision.from_dict(r) for r in d["revisions"]],
            comments=[TranslationComment.from_dict(c) for c in d["comments"]],
        )


@dataclass
class TranslationRequest:
    request_id: str
    requester: str
    target_kind: str  # "item" | "page"
    target: str
    timestamp: float
    fulfilled_languages: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "request_id": self.request_id,
            "requester": self.requester,
            "target_kind": self.target_kind,
            "target": self.target,
            "timestamp": self.timestamp,
            "fulfilled_languages": list(self.fulfilled_languages),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "TranslationRequest":
        return cls(
            request_id=d["request_id"],
            requester=d["requester"],
            target_kind=d["target_kind"],
            target=d["target"],
            timestamp=d["timestamp"],
            fulfilled_languages=list(d["fulfilled_languages"]),
        )


@dataclass
class Notification:
    notification_id: str
    member_id: str
    request_id: str
    item_key: str
    language: str
    author: str
    timestamp: float
    read: bool = False

    def to_dict(self) -> dict:
        return {
            "notification_id": self.notification_id,
            "member_id": self.member_id,
            "request_id": self.request_id,
            "item_key": self.item_key,
            "language": self.language,
            "author": self.author,
            "timestamp": self.timestamp,
            "read": self.read,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Notification":
        return cls(
            d["notification_id"],
            d["member_id"],
            d["request_id"],
            d["item_key"],
            d["language"],
            d["author"],
            d["timestamp"],
            d["read"],
        )


@dataclass
class BinderEntry:
    item_id: str
    language: str
    latest_version_authored: int
    item_key: str | None = None


@dataclass
class Binder:
    member_id: str
    translated: list[BinderEntry]
    requested: list[TranslationRequest]


def _normalized_nonempty(text: str) -> str:
    if not isinstance(text, str) or not text.strip():
        raise EmptyText("text must be non-empty")
    return text


class WorkflowStore:
    """Translations keyed by (item, language), plus requests and notifications."""

    def __init__(self):
        self.translations: dict[str, dict[str, Translation]] = {}
        self.requests: dict[str, TranslationRequest] = {}
        self.notifications: dict[str, list[Notification]] = {}
        self._request_seq = 0
        self._notification_seq = 0

    # -- translations -------------------------------------------------------

    def get_translation(self, item_id: str, language: str) -> Translation:
        translation = self.translations.get(item_id, {}).get(language)
        if translation is None:
            raise UnknownTranslation(f"no translation for {item_id}/{language}")
        return translation

    def find_translation(self, item_id: str, language: str) -> Translation | None:
        return self.translations.get(item_id, {}).get(language)

    def is_translated(self, item_id: str, language: str) -> bool:
        return self.find_translation(item_id, language) is not None

    def create_translation(
        self, item_id: str, language: str, text: str, author: str, timestamp: float, note: str | None
    ) -> Translation:
        text = _normalized_nonempty(text)
        if self.find_translation(item_id, language) is not None:
            raise AlreadyTranslated(f"{item_id}/{language} already translated; edit instead")
        translation = Translation(item_id=item_id, language=language)
        translation.revisions.append(Revision(text=text, author=author, timestamp=timestamp, note=note))
        self.translations.setdefault(item_id, {})[language] = translation
        return translation

    def edit_translation(
        self,
        item_id: str,
        language: str,
        base_version: int,
        text: str,
        author: str,
        timestamp: float,
        note: str | None,
    ) -> Translation:
        translation = self.get_translation(item_id, language)
        text = _normalized_nonempty(text)
        if base_version != translation.version:
            raise StaleVersion(
                f"base version {base_version} is not current version {translation.version}; refetch"
            )
        translation.revisions.append(Revision(text=text, author=author, timestamp=timestamp, note=note))
        return translation

    def add_comment(
        self,
        item_id: str,
        language: str,
        author: str,
        body: str,
        timestamp: float,
        crosspost_ref: dict | None,
    ) -> TranslationComment:
        translation = self.get_translation(item_id, language)
        if not body.strip():
            raise EmptyComment("comment body must be non-empty")
        comment = TranslationComment(
            author=author, body=body, timestamp=timestamp, crosspost_ref=crosspost_ref
        )
        translation.comments.append(comment)
        return comment

    # -- requests and notifications -----------------------------------------

    def check_no_open_request(self, requester: str, target: str) -> None:
        for request in self.requests.values():
            if request.requester == requester and request.target == target:
                raise DuplicateRequest(f"{requester} already requested {target}")

    def create_request(
        self, requester: str, target_kind: str, target: str, timestamp: float
    ) -> TranslationRequest:
        self.check_no_open_request(requester, target)
        self._request_seq += 1
        request = TranslationRequest(
            request_id=f"r-{self._request_seq:06d}",
            requester=requester,
            target_kind=target_kind,
            target=target,
            timestamp=timestamp,
        )
        self.requests[request.request_id] = request
        return request

    def requests_covering(self, item_id: str, page_id: str) -> list[TranslationRequest]:
        return [
            request
            for request in self.requests.values()
            if (request.target_kind == "item" and request.target == item_id)
            or (request.target_kind == "page" and request.target == page_id)
        ]

    def request_count_for(self, item_id: str, page_id: str) -> int:
        return len(self.requests_covering(item_id, page_id))

    def record_fulfillment(
        self,
        request: TranslationRequest,
        item_key: str,
        language: str,
        author: str,
        timestamp: float,
    ) -> Notification:
        if language not in request.fulfilled_languages:
            request.fulfilled_languages.append(language)
        self._notification_seq += 1
        notification = Notification(
            notification_id=f"n-{self._notification_seq:06d}",
            member_id=request.requester,
            request_id=request.request_id,
            item_key=item_key,
            language=language,
            author=author,
            timestamp=timestamp,
        )
        self.notifications.setdefault(request.requester, []).append(notification)
        return notification

    def requests_for(self, member_id: str) -> list[TranslationRequest]:
        return [r for r in self.requests.values() if r.requester == member_id]

    def notifications_for(
        self, member_id: str, since: float | None = None, include_read: bool = False
    ) -> list[Notification]:
        result = []
        for notification in self.notifications.get(member_id, []):
            if since is not None and notification.timestamp < since:
                continue
            if not include_read and notification.read:
                continue
            result.append(notification)
        return result

    def mark_read(self, member_id: str, ids: list[str] | None = None) -> int:
        marked = 0
        for notification in self.notifications.get(member_id, []):
            if ids is not None and notification.notification_id not in ids:
                continue
            if not notification.read:
                notification.read = True
                marked += 1
        return marked

    # -- binders ------------------------------------------------------------

    def authored_pairs(self, member_id: str) -> list[BinderEntry]:
        entries = []
        for item_id, by_language in self.translations.items():
            for language, translation in by_language.items():
                latest = 0
                for index, revision in enumerate(translation.revisions):
                    if revision.author == member_id:
                        latest = index + 1
                if latest > 0:
                    entries.append(
                        BinderEntry(
                            item_id=item_id, language=language, latest_version_authored=latest
                        )
                    )
        return entries

    def translated_count(self, member_id: str) -> int:
        return len(self.authored_pairs(member_id))

    # -- persistence --------------------------------------------------------

    def state_dict(self) -> dict:
        return {
            "translations": [
                t.to_dict() for by_lang in self.translations.values() for t in by_lang.values()
            ],
            "requests": [r.to_dict() for r in self.requests.values()],
            "notifications": [
                n.to_dict() for per_member in self.notifications.values() for n in per_member
            ],
            "request_seq": self._request_seq,
            "notification_seq": self._notification_seq,
        }

    def load_state(self, d: dict) -> None:
        self.translations = {}
        for t_dict in d["translations"]:
            translation = Translation.from_dict(t_dict)
            self.translations.setdefault(translation.item_id, {})[translation.language] = translation
        self.requests = {}
        for r_dict in d["requests"]:
            request = TranslationRequest.from_dict(r_dict)
            self.requests[request.request_id] = request
        self.notifications = {}
        for n_dict in d["notifications"]:
            notification = Notification.from_dict(n_dict)
            self.notifications.setdefault(notification.member_id, []).append(notification)
        self._request_seq = d["request_seq"]
        self._notification_seq = d["notification_seq"]
