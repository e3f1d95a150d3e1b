"""Self-hostable community translation center.

The engine (:class:`TranslationCenter`) journals every mutation to an
append-only log so a store directory can always be recovered byte-exactly;
the HTTP layer in :mod:`transcenter.api` and the ``tc`` command in
:mod:`transcenter.cli` are thin shells over it.
"""

from .catalog import (
    CATEGORIES,
    DEFAULT_CONTEXT_WINDOW,
    ContextSnippet,
    LanguageProfile,
    SourceItem,
    extract_spans,
    normalize_tag,
)
from .center import MergeReport, TranslationCenter
from .config import EngineConfig, load_config, parse_config
from .errors import TranslationCenterError
from .priority import ItemStats, PriorityScore, PriorityWeights
from .progress import ProgressMeter
from .rubric import COMPONENT_BOUNDS, METHODS, PERFECT_TOTAL, RubricScorecard
from .store import StoreDir

__all__ = [
    "CATEGORIES",
    "COMPONENT_BOUNDS",
    "DEFAULT_CONTEXT_WINDOW",
    "ContextSnippet",
    "EngineConfig",
    "ItemStats",
    "LanguageProfile",
    "METHODS",
    "MergeReport",
    "PERFECT_TOTAL",
    "PriorityScore",
    "PriorityWeights",
    "ProgressMeter",
    "RubricScorecard",
    "SourceItem",
    "StoreDir",
    "TranslationCenter",
    "TranslationCenterError",
    "extract_spans",
    "load_config",
    "normalize_tag",
    "parse_config",
]

__version__ = "0.1.0"
