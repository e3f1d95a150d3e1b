"""Forums, polls, the terminology glossary, and the translator directory.

Four forum kinds exist: ``general``, ``help``, ``suggestion``, and one
``language:<tag>`` forum per registered language.  Polls carry one live vote
per member (revoting replaces it until the poll closes).  Glossary terms are
unique case-insensitively and may hold several same-language translations
distinguished by regional notes.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .catalog import normalize_tag
from .errors import (
    BadOption,
    BadReplyRef,
    DuplicateTerm,
    EmptyBody,
    EmptyText,
    MalformedTag,
    PollClosed,
    TooFewOptions,
    UnknownForum,
    UnknownPoll,
    UnknownTerm,
    UnknownThread,
)

FIXED_FORUMS = ("general", "help", "suggestion")


def normalize_forum(kind: str, registered_languages: set[str]) -> str:
    """Validate a forum token; language forums require a registered language."""
    if kind in FIXED_FORUMS:
        return kind
    if isinstance(kind, str) and kind.startswith("language:"):
        try:
            tag = normalize_tag(kind[len("language:") :])
        except MalformedTag:
            raise UnknownForum(f"no such forum: {kind}") from None
        if tag in registered_languages:
            return f"language:{tag}"
    raise UnknownForum(f"no such forum: {kind}")


def normalize_poll_scope(scope: str, registered_languages: set[str]) -> str:
    if scope == "global":
        return scope
    if isinstance(scope, str) and scope.startswith("language:"):
        try:
            tag = normalize_tag(scope[len("language:") :])
        except MalformedTag:
            raise UnknownForum(f"no such poll scope: {scope}") from None
        if tag in registered_languages:
            return f"language:{tag}"
    raise UnknownForum(f"no such poll scope: {scope}")


@dataclass
class Post:
    post_id: str
    author: str
    body: str
    timestamp: float
    reply_to: str | None = None

    def to_dict(self) -> dict:
        return {
            "post_id": self.post_id,
            "author": self.author,
            "body": self.body,
            "timestamp": self.timestamp,
            "reply_to": self.reply_to,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Post":
        return cls(d["post_id"], d["author"], d["body"], d["timestamp"], d["reply_to"])


@dataclass
class Thread:
    thread_id: str
    forum: str
    title: str
    author: str
    created_at: float
    posts: list[Post] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "thread_id": self.thread_id,
            "forum": self.forum,
            "title": self.title,
            "author": self.author,
            "created_at": self.created_at,
            "posts": [p.to_dict() for p in self.posts],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Thread":
        return cls(
            thread_id=d["thread_id"],
            forum=d["forum"],
            title=d["title"],
            author=d["author"],
            created_at=d["created_at"],
            posts=[Post.from_dict(p) for p in d["posts"]],
        )


@dataclass
class Poll:
    poll_id: str
    scope: str
    question: str
    options: list[str]
    creator: str
    created_at: float
    closes_at: float | None = None
    votes: dict[str, int] = field(default_factory=dict)  # member_id -> option index

    def to_dict(self) -> dict:
        return {
            "poll_id": self.poll_id,
            "scope": self.scope,
            "question": self.question,
            "options": list(self.options),
            "creator": self.creator,
            "created_at": self.created_at,
            "closes_at": self.closes_at,
            "votes": dict(self.votes),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Poll":
        return cls(
            poll_id=d["poll_id"],
            scope=d["scope"],
            question=d["question"],
            options=list(d["options"]),
            creator=d["creator"],
            created_at=d["created_at"],
            closes_at=d["closes_at"],
            votes=dict(d["votes"]),
        )


@dataclass
class TermTranslation:
    language: str
    text: str
    regional_note: str | None
    author: str
    timestamp: float

    def to_dict(self) -> dict:
        return {
            "language": self.language,
            "text": self.text,
            "regional_note": self.regional_note,
            "author": self.author,
            "timestamp": self.timestamp,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "TermTranslation":
        return cls(d["language"], d["text"], d["regional_note"], d["author"], d["timestamp"])


@dataclass
class GlossaryEntry:
    term: str
    definition: str
    creator: str
    created_at: float
    translations: list[TermTranslation] = field(default_factory=list)
    comments: list[Post] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "term": self.term,
            "definition": self.definition,
            "creator": self.creator,
            "created_at": self.created_at,
            "translations": [t.to_dict() for t in self.translations],
            "comments": [c.to_dict() for c in self.comments],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "GlossaryEntry":
        return cls(
            term=d["term"],
            definition=d["definition"],
            creator=d["creator"],
            created_at=d["created_at"],
            translations=[TermTranslation.from_dict(t) for t in d["translations"]],
            comments=[Post.from_dict(p) for p in d["comments"]],
        )


@dataclass
class DirectoryEntry:
    member_id: str
    display_name: str
    contact: str
    opted_in: bool
    translated_count: int


class CommunityStore:
    def __init__(self):
        self.threads: dict[str, Thread] = {}
        self.polls: dict[str, Poll] = {}
        self.glossary: dict[str, GlossaryEntry] = {}  # keyed by casefolded term
        self.directory: dict[str, dict] = {}  # member_id -> {"contact", "opted_in"}
        # (item_id, language) -> thread carrying crossposted translation comments
        self.crosspost_threads: dict[str, str] = {}
        self._thread_seq = 0
        self._post_seq = 0
        self._poll_seq = 0

    # -- forums -------------------------------------------------------------

    def _next_post_id(self) -> str:
        self._post_seq += 1
        return f"po-{self._post_seq:06d}"

    def create_thread(
        self, forum: str, author: str, title: str, body: str, timestamp: float
    ) -> Thread:
        if not title.strip() or not body.strip():
            raise EmptyBody("thread title and body must be non-empty")
        self._thread_seq += 1
        thread = Thread(
            thread_id=f"th-{self._thread_seq:06d}",
            forum=forum,
            title=title,
            author=author,
            created_at=timestamp,
        )
        thread.posts.append(
            Post(post_id=self._next_post_id(), author=author, body=body, timestamp=timestamp)
        )
        self.threads[thread.thread_id] = thread
        return thread

    def get_thread(self, thread_id: str) -> Thread:
        thread = self.threads.get(thread_id)
        if thread is None:
            raise UnknownThread(f"no such thread: {thread_id}")
        return thread

    def reply(
        self, thread_id: str, author: str, body: str, timestamp: float, reply_to: str | None
    ) -> Post:
        thread = self.get_thread(thread_id)
        if not body.strip():
            raise EmptyBody("post body must be non-empty")
        if reply_to is not None and all(p.post_id != reply_to for p in thread.posts):
            raise BadReplyRef(f"{reply_to} is not a post in thread {thread_id}")
        post = Post(
            post_id=self._next_post_id(),
            author=author,
            body=body,
            timestamp=timestamp,
            reply_to=reply_to,
        )
        thread.posts.append(post)
        return post

    def threads_in(self, forum: str) -> list[Thread]:
        return [t for t in self.threads.values() if t.forum == forum]

    def crosspost_key(self, item_id: str, language: str) -> str:
        return f"{item_id}|{language}"

    # -- polls --------------------------------------------------------------

    def create_poll(
        self,
        creator: str,
        scope: str,
        question: str,
        options: list[str],
        closes_at: float | None,
        timestamp: float,
    ) -> Poll:
        if not question.strip():
            raise EmptyText("poll question must be non-empty")
        if len(options) < 2:
            raise TooFewOptions("a poll needs at least two options")
        if len(set(options)) != len(options):
            raise BadOption("poll options must be distinct")
        self._poll_seq += 1
        poll = Poll(
            poll_id=f"pl-{self._poll_seq:06d}",
            scope=scope,
            question=question,
            options=list(options),
            creator=creator,
            created_at=timestamp,
            closes_at=closes_at,
        )
        self.polls[poll.poll_id] = poll
        return poll

    def get_poll(self, poll_id: str) -> Poll:
        poll = self.polls.get(poll_id)
        if poll is None:
            raise UnknownPoll(f"no such poll: {poll_id}")
        return poll

    def vote(self, poll_id: str, member_id: str, option_index: int, timestamp: float) -> Poll:
        poll = self.get_poll(poll_id)
        if poll.closes_at is not None and timestamp > poll.closes_at:
            raise PollClosed(f"poll {poll_id} closed at {poll.closes_at}")
        if not isinstance(option_index, int) or isinstance(option_index, bool) or not (
            0 <= option_index < len(poll.options)
        ):
            raise BadOption(f"option index out of range: {option_index!r}")
        poll.votes[member_id] = option_index
        return poll

    def tally(self, poll_id: str) -> dict:
        poll = self.get_poll(poll_id)
        counts = [0] * len(poll.options)
        for index in poll.votes.values():
            counts[index] += 1
        return {
            "poll_id": poll.poll_id,
            "options": list(poll.options),
            "counts": counts,
            "voters": len(poll.votes),
        }

    # -- glossary -----------------------------------------------------------

    def add_term(self, creator: str, term: str, definition: str, timestamp: float) -> GlossaryEntry:
        if not term.strip() or not definition.strip():
            raise EmptyText("term and definition must be non-empty")
        key = term.casefold()
        if key in self.glossary:
            raise DuplicateTerm(f"term already defined: {term}")
        entry = GlossaryEntry(
            term=term, definition=definition, creator=creator, created_at=timestamp
        )
        self.glossary[key] = entry
        return entry

    def get_term(self, term: str) -> GlossaryEntry:
        entry = self.glossary.get(term.casefold())
        if entry is None:
            raise UnknownTerm(f"no such term: {term}")
        return entry

    def add_term_translation(
        self,
        author: str,
        term: str,
        language: str,
        text: str,
        regional_note: str | None,
        timestamp: float,
    ) -> GlossaryEntry:
        entry = self.get_term(term)
        tag = normalize_tag(language)
        if not text.strip():
            raise EmptyText("term translation must be non-empty")
        entry.translations.append(
            TermTranslation(
                language=tag, text=text, regional_note=regional_note, author=author, timestamp=timestamp
            )
        )
        return entry

    def comment_on_term(
        self, author: str, term: str, body: str, timestamp: float, reply_to: str | None
    ) -> Post:
        entry = self.get_term(term)
        if not body.strip():
            raise EmptyText("comment body must be non-empty")
        if reply_to is not None and all(p.post_id != reply_to for p in entry.comments):
            raise BadReplyRef(f"{reply_to} is not a comment on term {entry.term}")
        post = Post(
            post_id=self._next_post_id(),
            author=author,
            body=body,
            timestamp=timestamp,
            reply_to=reply_to,
        )
        entry.comments.append(post)
        return post

    def list_terms(self) -> list[GlossaryEntry]:
        return [self.glossary[key] for key in sorted(self.glossary)]

    # -- directory ----------------------------------------------------------

    def optin(self, member_id: str, contact: str) -> None:
        if not contact.strip():
            raise EmptyText("contact must be non-empty")
        self.directory[member_id] = {"contact": contact, "opted_in": True}

    def optout(self, member_id: str) -> None:
        if member_id in self.directory:
            self.directory[member_id]["opted_in"] = False

    def opted_in_members(self) -> list[tuple[str, str]]:
        return sorted(
            (member_id, entry["contact"])
            for member_id, entry in self.directory.items()
            if entry["opted_in"]
        )

    # -- persistence --------------------------------------------------------

    def state_dict(self) -> dict:
        return {
            "threads": [t.to_dict() for t in self.threads.values()],
            "polls": [p.to_dict() for p in self.polls.values()],
            "glossary": [e.to_dict() for e in self.glossary.values()],
            "directory": {m: dict(v) for m, v in self.directory.items()},
            "crosspost_threads": dict(self.crosspost_threads),
            "thread_seq": self._thread_seq,
            "post_seq": self._post_seq,
            "poll_seq": self._poll_seq,
        }

    def load_state(self, d: dict) -> None:
        self.threads = {}
        for t_dict in d["threads"]:
            thread = Thread.from_dict(t_dict)
            self.threads[thread.thread_id] = thread
        self.polls = {}
        for p_dict in d["polls"]:
            poll = Poll.from_dict(p_dict)
            self.polls[poll.poll_id] = poll
        self.glossary = {}
        for e_dict in d["glossary"]:
            entry = GlossaryEntry.from_dict(e_dict)
            self.glossary[entry.term.casefold()] = entry
        self.directory = {m: dict(v) for m, v in d["directory"].items()}
        self.crosspost_threads = dict(d["crosspost_threads"])
        self._thread_seq = d["thread_seq"]
        self._post_seq = d["post_seq"]
        self._poll_seq = d["poll_seq"]
