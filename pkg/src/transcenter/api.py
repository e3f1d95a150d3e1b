"""HTTP surface of the translation center.

A thin JSON shell over :class:`~transcenter.center.TranslationCenter`: every
route body is one engine call plus serialization, so results over the wire
match results of the module operation.  Reads are public; mutations require
a bearer session token obtained from ``POST /api/v1/sessions``.  Sessions
live in process memory only and do not survive a restart.
"""

from __future__ import annotations

import re
import secrets
from importlib import resources

from fastapi import Depends, FastAPI, Query, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, PlainTextResponse
from pydantic import BaseModel

from .catalog import LanguageProfile, SourceItem
from .center import TranslationCenter
from .community import DirectoryEntry, GlossaryEntry, Poll, Thread
from .errors import AuthRequired, TranslationCenterError, UnknownPage
from .priority import ItemStats, PriorityScore
from .progress import ProgressMeter
from .review import ReviewRecord
from .rubric import EvaluationRecord, RubricReport, render_report
from .workflow import Notification, Translation, TranslationRequest

API_PREFIX = "/api/v1"

_HELP_NAME_RE = re.compile(r"^[a-z0-9][a-z0-9_-]*$")


# -- request bodies ----------------------------------------------------------

class RegisterBody(BaseModel):
    handle: str
    credential: str


class SessionBody(BaseModel):
    handle: str
    credential: str


class LanguageBody(BaseModel):
    code: str
    display_name: str | None = None
    palette: list[str] | None = None
    enabled: bool = True


class SubmitBody(BaseModel):
    text: str
    note: str | None = None


class EditBody(BaseModel):
    base_version: int
    text: str
    note: str | None = None


class CommentBody(BaseModel):
    body: str


class ReviewBody(BaseModel):
    item_id: str
    language: str
    rating: int
    body: str | None = None


class RequestBody(BaseModel):
    target: str


class ReadMarkBody(BaseModel):
    ids: list[str] | None = None


class ThreadBody(BaseModel):
    title: str
    body: str


class PostBody(BaseModel):
    body: str
    reply_to: str | None = None


class PollBody(BaseModel):
    scope: str
    question: str
    options: list[str]
    closes_at: float | None = None


class VoteBody(BaseModel):
    option_index: int


class TermBody(BaseModel):
    term: str
    definition: str


class TermTranslationBody(BaseModel):
    language: str
    text: str
    regional_note: str | None = None


class TermCommentBody(BaseModel):
    body: str
    reply_to: str | None = None


class DirectoryBody(BaseModel):
    opted_in: bool
    contact: str | None = None


class EvaluationBody(BaseModel):
    page_label: str
    language: str
    method: str
    judgments: dict[str, int] | None = None


# -- serialization -----------------------------------------------------------

def language_json(profile: LanguageProfile) -> dict:
    return profile.to_dict()


def item_json(item: SourceItem, stats: ItemStats | None = None) -> dict:
    data = item.to_dict()
    if stats is not None:
        data["status"] = {
            "translated": stats.translated,
            "request_count": stats.request_count,
            "rating_mean": stats.rating_mean,
        }
    return data


def score_json(score: PriorityScore) -> dict:
    return {
        "item_id": score.item_id,
        "language": score.language,
        "components": score.components,
        "total": score.total,
    }


def translation_json(translation: Translation, engine: TranslationCenter) -> dict:
    return {
        "item_id": translation.item_id,
        "language": translation.language,
        "version": translation.version,
        "current_text": translation.current_text,
        "current_author": engine.member_handle(translation.current_author),
        "revisions": [
            {
                "version": index,
                "text": revision.text,
                "author": engine.member_handle(revision.author),
                "timestamp": revision.timestamp,
                "note": revision.note,
            }
            for index, revision in enumerate(translation.revisions, start=1)
        ],
        "comments": [
            {
                "author": engine.member_handle(comment.author),
                "body": comment.body,
                "timestamp": comment.timestamp,
                "crosspost_ref": comment.crosspost_ref,
            }
            for comment in translation.comments
        ],
    }


def review_json(record: ReviewRecord, stale: bool, engine: TranslationCenter) -> dict:
    return {
        "reviewer": engine.member_handle(record.reviewer),
        "item_id": record.item_id,
        "language": record.language,
        "reviewed_version": record.reviewed_version,
        "rating": record.rating,
        "body": record.body,
        "timestamp": record.timestamp,
        "stale": stale,
    }


def request_json(request: TranslationRequest) -> dict:
    return request.to_dict()


def notification_json(notification: Notification) -> dict:
    return notification.to_dict()


def thread_json(thread: Thread, engine: TranslationCenter, with_posts: bool = True) -> dict:
    data = {
        "thread_id": thread.thread_id,
        "forum": thread.forum,
        "title": thread.title,
        "author": engine.member_handle(thread.author),
        "created_at": thread.created_at,
        "post_count": len(thread.posts),
    }
    if with_posts:
        data["posts"] = [
            {
                "post_id": post.post_id,
                "author": engine.member_handle(post.author),
                "body": post.body,
                "timestamp": post.timestamp,
                "reply_to": post.reply_to,
            }
            for post in thread.posts
        ]
    return data


def poll_json(poll: Poll, engine: TranslationCenter) -> dict:
    return {
        "poll_id": poll.poll_id,
        "scope": poll.scope,
        "question": poll.question,
        "options": list(poll.options),
        "creator": engine.member_handle(poll.creator),
        "created_at": poll.created_at,
        "closes_at": poll.closes_at,
        "voters": len(poll.votes),
    }


def glossary_json(entry: GlossaryEntry, engine: TranslationCenter) -> dict:
    return {
        "term": entry.term,
        "definition": entry.definition,
        "creator": engine.member_handle(entry.creator),
        "created_at": entry.created_at,
        "translations": [
            {
                "language": t.language,
                "text": t.text,
                "regional_note": t.regional_note,
                "author": engine.member_handle(t.author),
                "timestamp": t.timestamp,
            }
            for t in entry.translations
        ],
        "comments": [
            {
                "post_id": post.post_id,
                "author": engine.member_handle(post.author),
                "body": post.body,
                "timestamp": post.timestamp,
                "reply_to": post.reply_to,
            }
            for post in entry.comments
        ],
    }


def directory_json(entry: DirectoryEntry) -> dict:
    return {
        "member_id": entry.member_id,
        "display_name": entry.display_name,
        "contact": entry.contact,
        "translated_count": entry.translated_count,
    }


def meter_json(meter: ProgressMeter) -> dict:
    return {
        "language": meter.language,
        "scope": meter.scope,
        "translated": meter.translated,
        "total": meter.total,
        "percent": meter.percent,
    }


def evaluation_json(record: EvaluationRecord, engine: TranslationCenter) -> dict:
    data = record.to_dict()
    data["evaluator"] = engine.member_handle(record.evaluator)
    data["total"] = record.total
    return data


def report_json(report: RubricReport) -> dict:
    return {
        "group_by": report.group_by,
        "rows": report.rows,
        "means": report.means,
        "rendered": render_report(report),
    }


# -- app factory -------------------------------------------------------------

def create_app(engine: TranslationCenter) -> FastAPI:
    app = FastAPI(title="translation center", docs_url=None, redoc_url=None)
    app.state.engine = engine
    app.state.sessions = {}
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"]
    )

    @app.exception_handler(TranslationCenterError)
    async def domain_error(_request: Request, exc: TranslationCenterError):
        return JSONResponse(
            status_code=exc.http_status, content={"error": exc.name, "detail": str(exc)}
        )

    @app.exception_handler(RequestValidationError)
    async def validation_error(_request: Request, exc: RequestValidationError):
        return JSONResponse(
            status_code=422, content={"error": "ValidationError", "detail": str(exc)}
        )

    def require_member(request: Request) -> str:
        header = request.headers.get("authorization", "")
        if not header.lower().startswith("bearer "):
            raise AuthRequired("missing bearer session token")
        member_id = app.state.sessions.get(header[7:].strip())
        if member_id is None:
            raise AuthRequired("unknown session token")
        return member_id

    # -- members and sessions ------------------------------------------------

    @app.post(f"{API_PREFIX}/members", status_code=201)
    def register_member(body: RegisterBody):
        member = engine.register_member(body.handle, body.credential)
        return {"member_id": member.member_id, "handle": member.handle}

    @app.post(f"{API_PREFIX}/sessions", status_code=201)
    def open_session(body: SessionBody):
        member = engine.authenticate(body.handle, body.credential)
        token = secrets.token_hex(16)
        app.state.sessions[token] = member.member_id
        return {"token": token, "member_id": member.member_id, "handle": member.handle}

    # -- catalog -------------------------------------------------------------

    @app.get(f"{API_PREFIX}/languages")
    def list_languages():
        return {"languages": [language_json(p) for p in engine.list_languages()]}

    @app.post(f"{API_PREFIX}/languages", status_code=201)
    def register_language(body: LanguageBody, member_id: str = Depends(require_member)):
        profile = engine.register_language(
            body.code, body.display_name, body.palette, body.enabled
        )
        return language_json(profile)

    @app.get(f"{API_PREFIX}/items")
    def list_items(
        language: str | None = None,
        flt: str = Query("all", alias="filter"),
        page: str | None = None,
    ):
        pairs = engine.item_overview(language, flt, page)
        return {"items": [item_json(item, stats) for item, stats in pairs]}

    @app.get(f"{API_PREFIX}/item/{{item_id}}")
    def get_item(item_id: str, language: str | None = None):
        item, stats, translation = engine.item_detail(item_id, language)
        data = item_json(item, stats)
        if translation is not None:
            data["translation"] = translation_json(translation, engine)
        return data

    @app.get(f"{API_PREFIX}/worklist")
    def worklist(language: str, flt: str = Query("all", alias="filter")):
        entries = engine.build_worklist(language, flt)
        return {
            "language": language,
            "entries": [
                {"item": item_json(item), "score": score_json(score)}
                for item, score in entries
            ],
        }

    @app.get(f"{API_PREFIX}/random")
    def random_item(language: str, seed: int | None = None):
        return item_json(engine.pick_random(language, seed))

    # -- translations --------------------------------------------------------

    @app.get(f"{API_PREFIX}/translations/{{item_id}}/{{language}}")
    def get_translation(item_id: str, language: str):
        translation = engine.get_translation(item_id, language)
        data = translation_json(translation, engine)
        aggregate = engine.rating_aggregate(item_id, language)
        data["rating"] = {"count": aggregate.count, "mean": aggregate.mean}
        return data

    @app.post(f"{API_PREFIX}/translations/{{item_id}}/{{language}}", status_code=201)
    def submit_translation(
        item_id: str, language: str, body: SubmitBody, member_id: str = Depends(require_member)
    ):
        translation = engine.submit_translation(member_id, item_id, language, body.text, body.note)
        return translation_json(translation, engine)

    @app.put(f"{API_PREFIX}/translations/{{item_id}}/{{language}}")
    def edit_translation(
        item_id: str, language: str, body: EditBody, member_id: str = Depends(require_member)
    ):
        translation = engine.edit_translation(
            member_id, item_id, language, body.base_version, body.text, body.note
        )
        return translation_json(translation, engine)

    @app.post(f"{API_PREFIX}/translations/{{item_id}}/{{language}}/comments", status_code=201)
    def comment_translation(
        item_id: str, language: str, body: CommentBody, member_id: str = Depends(require_member)
    ):
        comment = engine.add_comment(member_id, item_id, language, body.body)
        return {
            "author": engine.member_handle(comment.author),
            "body": comment.body,
            "timestamp": comment.timestamp,
            "crosspost_ref": comment.crosspost_ref,
        }

    # -- reviews -------------------------------------------------------------

    @app.post(f"{API_PREFIX}/reviews", status_code=201)
    def rate(body: ReviewBody, member_id: str = Depends(require_member)):
        record = engine.rate_translation(
            member_id, body.item_id, body.language, body.rating, body.body
        )
        return review_json(record, False, engine)

    @app.get(f"{API_PREFIX}/reviews")
    def list_reviews(item: str, language: str):
        listing = engine.list_reviews(item, language)
        aggregate = engine.rating_aggregate(item, language)
        return {
            "reviews": [review_json(record, stale, engine) for record, stale in listing],
            "rating": {"count": aggregate.count, "mean": aggregate.mean},
        }

    # -- requests, binder, notifications -------------------------------------

    @app.post(f"{API_PREFIX}/requests", status_code=201)
    def request_translation(body: RequestBody, member_id: str = Depends(require_member)):
        return request_json(engine.request_translation(member_id, body.target))

    @app.get(f"{API_PREFIX}/requests/mine")
    def my_requests(member_id: str = Depends(require_member)):
        binder = engine.get_binder(member_id)
        return {"requests": [request_json(r) for r in binder.requested]}

    @app.get(f"{API_PREFIX}/binder")
    def binder(member_id: str = Depends(require_member)):
        data = engine.get_binder(member_id)
        return {
            "member_id": data.member_id,
            "translated": [
                {
                    "item_id": entry.item_id,
                    "item_key": entry.item_key,
                    "language": entry.language,
                    "latest_version_authored": entry.latest_version_authored,
                }
                for entry in data.translated
            ],
            "requested": [request_json(r) for r in data.requested],
        }

    @app.get(f"{API_PREFIX}/notifications")
    def notifications(
        since: float | None = None,
        include_read: bool = False,
        member_id: str = Depends(require_member),
    ):
        listed = engine.list_notifications(member_id, since, include_read)
        return {"notifications": [notification_json(n) for n in listed]}

    @app.post(f"{API_PREFIX}/notifications/read")
    def mark_read(body: ReadMarkBody, member_id: str = Depends(require_member)):
        return {"marked": engine.mark_notifications_read(member_id, body.ids)}

    # -- forums --------------------------------------------------------------

    @app.get(f"{API_PREFIX}/forums/{{kind}}/threads")
    def forum_threads(kind: str):
        threads = engine.list_threads(kind)
        return {"threads": [thread_json(t, engine, with_posts=False) for t in threads]}

    @app.post(f"{API_PREFIX}/forums/{{kind}}/threads", status_code=201)
    def create_thread(kind: str, body: ThreadBody, member_id: str = Depends(require_member)):
        return thread_json(engine.create_thread(kind, member_id, body.title, body.body), engine)

    @app.get(f"{API_PREFIX}/threads/{{thread_id}}")
    def get_thread(thread_id: str):
        return thread_json(engine.get_thread(thread_id), engine)

    @app.post(f"{API_PREFIX}/threads/{{thread_id}}/posts", status_code=201)
    def reply(thread_id: str, body: PostBody, member_id: str = Depends(require_member)):
        post = engine.reply(thread_id, member_id, body.body, body.reply_to)
        return {
            "post_id": post.post_id,
            "author": engine.member_handle(post.author),
            "body": post.body,
            "timestamp": post.timestamp,
            "reply_to": post.reply_to,
        }

    # -- polls ---------------------------------------------------------------

    @app.get(f"{API_PREFIX}/polls")
    def list_polls():
        return {"polls": [poll_json(p, engine) for p in engine.list_polls()]}

    @app.post(f"{API_PREFIX}/polls", status_code=201)
    def create_poll(body: PollBody, member_id: str = Depends(require_member)):
        poll = engine.create_poll(member_id, body.scope, body.question, body.options, body.closes_at)
        return poll_json(poll, engine)

    @app.post(f"{API_PREFIX}/polls/{{poll_id}}/votes", status_code=201)
    def vote(poll_id: str, body: VoteBody, member_id: str = Depends(require_member)):
        return engine.vote(poll_id, member_id, body.option_index)

    @app.get(f"{API_PREFIX}/polls/{{poll_id}}/tally")
    def tally(poll_id: str):
        return engine.tally(poll_id)

    # -- glossary ------------------------------------------------------------

    @app.get(f"{API_PREFIX}/glossary")
    def list_terms():
        return {"terms": [glossary_json(e, engine) for e in engine.list_terms()]}

    @app.post(f"{API_PREFIX}/glossary", status_code=201)
    def add_term(body: TermBody, member_id: str = Depends(require_member)):
        return glossary_json(engine.add_term(member_id, body.term, body.definition), engine)

    @app.get(f"{API_PREFIX}/glossary/{{term}}")
    def get_term(term: str):
        return glossary_json(engine.get_term(term), engine)

    @app.post(f"{API_PREFIX}/glossary/{{term}}/translations", status_code=201)
    def add_term_translation(
        term: str, body: TermTranslationBody, member_id: str = Depends(require_member)
    ):
        entry = engine.add_term_translation(
            member_id, term, body.language, body.text, body.regional_note
        )
        return glossary_json(entry, engine)

    @app.post(f"{API_PREFIX}/glossary/{{term}}/comments", status_code=201)
    def comment_on_term(term: str, body: TermCommentBody, member_id: str = Depends(require_member)):
        post = engine.comment_on_term(member_id, term, body.body, body.reply_to)
        return {
            "post_id": post.post_id,
            "author": engine.member_handle(post.author),
            "body": post.body,
            "timestamp": post.timestamp,
            "reply_to": post.reply_to,
        }

    # -- directory -----------------------------------------------------------

    @app.get(f"{API_PREFIX}/directory")
    def directory():
        return {"members": [directory_json(e) for e in engine.list_directory()]}

    @app.post(f"{API_PREFIX}/directory")
    def directory_update(body: DirectoryBody, member_id: str = Depends(require_member)):
        if body.opted_in:
            engine.directory_optin(member_id, body.contact or "")
        else:
            engine.directory_optout(member_id)
        return {"member_id": member_id, "opted_in": body.opted_in}

    # -- meters --------------------------------------------------------------

    @app.get(f"{API_PREFIX}/meters")
    def meters(language: str | None = None, scope: str = "all"):
        if language is not None:
            return meter_json(engine.compute_meter(language, scope))
        profiles = engine.list_languages()
        return {
            "meters": [meter_json(engine.compute_meter(p.code, scope)) for p in profiles]
        }

    # -- rubric --------------------------------------------------------------

    @app.get(f"{API_PREFIX}/rubric/records")
    def list_evaluations():
        return {"records": [evaluation_json(r, engine) for r in engine.list_evaluations()]}

    @app.post(f"{API_PREFIX}/rubric/records", status_code=201)
    def record_evaluation(body: EvaluationBody, member_id: str = Depends(require_member)):
        record = engine.record_evaluation(
            body.page_label, body.language, body.method, body.judgments, member_id
        )
        return evaluation_json(record, engine)

    @app.get(f"{API_PREFIX}/rubric/report")
    def rubric_report(group_by: str = Query("method", pattern="^(method|language|page)$")):
        return report_json(engine.rubric_report(group_by))

    # -- static help content -------------------------------------------------

    def help_root():
        store = engine.store
        if store is not None and store.content_dir.is_dir():
            return store.content_dir
        return None

    def packaged_help() -> dict[str, str]:
        pages = {}
        base = resources.files("transcenter").joinpath("content")
        for entry in base.iterdir():
            if entry.name.endswith(".md"):
                pages[entry.name[:-3]] = entry.read_text(encoding="utf-8")
        return pages

    @app.get(f"{API_PREFIX}/help")
    def help_index():
        root = help_root()
        if root is not None:
            names = sorted(p.stem for p in root.glob("*.md"))
            if names:
                return {"pages": names}
        return {"pages": sorted(packaged_help())}

    @app.get(f"{API_PREFIX}/help/{{name}}")
    def help_page(name: str):
        if not _HELP_NAME_RE.match(name):
            raise UnknownPage(f"no such help page: {name}")
        root = help_root()
        if root is not None:
            path = root / f"{name}.md"
            if path.is_file():
                return PlainTextResponse(path.read_text(encoding="utf-8"), media_type="text/markdown")
        pages = packaged_help()
        if name not in pages:
            raise UnknownPage(f"no such help page: {name}")
        return PlainTextResponse(pages[name], media_type="text/markdown")

    return app
