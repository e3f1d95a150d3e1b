"""Domain error hierarchy shared by all subsystems.

Every error carries a stable ``name`` (its class name) and an HTTP status
used by the wire layer; handlers translate them to ``{"error": name,
"detail": ...}`` bodies.
"""

from __future__ import annotations


class TranslationCenterError(Exception):
    """Base class for all domain errors."""

    http_status = 400

    @property
    def name(self) -> str:
        return type(self).__name__


class NotFoundError(TranslationCenterError):
    http_status = 404


class ConflictError(TranslationCenterError):
    http_status = 409


# -- languages / catalog ----------------------------------------------------

class MalformedTag(TranslationCenterError):
    pass


class DuplicateLanguage(ConflictError):
    pass


class UnknownLanguage(NotFoundError):
    pass


class UnknownItem(NotFoundError):
    pass


class UnknownPage(NotFoundError):
    pass


class UnbalancedMarker(TranslationCenterError):
    pass


class BadPageId(TranslationCenterError):
    pass


class EmptySpan(TranslationCenterError):
    pass


class ParseError(TranslationCenterError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class EncodingError(TranslationCenterError):
    pass


# -- workflow ---------------------------------------------------------------

class UnknownTranslation(NotFoundError):
    pass


class AlreadyTranslated(ConflictError):
    pass


class StaleVersion(ConflictError):
    pass


class EmptyText(TranslationCenterError):
    pass


class EmptyComment(TranslationCenterError):
    pass


class DuplicateRequest(ConflictError):
    pass


class UnknownTarget(NotFoundError):
    pass


class NothingToTranslate(NotFoundError):
    pass


# -- review -----------------------------------------------------------------

class RatingOutOfRange(TranslationCenterError):
    pass


class SelfReview(TranslationCenterError):
    http_status = 403


# -- community --------------------------------------------------------------

class UnknownForum(NotFoundError):
    pass


class UnknownThread(NotFoundError):
    pass


class EmptyBody(TranslationCenterError):
    pass


class BadReplyRef(TranslationCenterError):
    pass


class UnknownPoll(NotFoundError):
    pass


class PollClosed(ConflictError):
    pass


class BadOption(TranslationCenterError):
    pass


class TooFewOptions(TranslationCenterError):
    pass


class DuplicateTerm(ConflictError):
    pass


class UnknownTerm(NotFoundError):
    pass


# -- rubric -----------------------------------------------------------------

class MissingComponent(TranslationCenterError):
    pass


class UnknownComponent(TranslationCenterError):
    pass


class ScoreOutOfRange(TranslationCenterError):
    pass


class UnknownMethod(TranslationCenterError):
    pass


class ScorecardRequired(TranslationCenterError):
    pass


class ScorecardForbidden(TranslationCenterError):
    pass


# -- service ----------------------------------------------------------------

class UnknownMember(NotFoundError):
    pass


class DuplicateHandle(ConflictError):
    pass


class AuthFailed(TranslationCenterError):
    http_status = 401


class AuthRequired(TranslationCenterError):
    http_status = 401


class ConfigError(TranslationCenterError):
    pass


class StorePermissionError(TranslationCenterError):
    pass


class PortBindError(TranslationCenterError):
    pass
