"""Line-oriented ``key = value`` service configuration."""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from .catalog import DEFAULT_CONTEXT_WINDOW
from .errors import ConfigError
from .priority import DEFAULT_CATEGORY_WEIGHTS, PriorityWeights

DEFAULT_SNAPSHOT_INTERVAL = 500

_WEIGHT_KEYS = ("w_cat", "w_view", "w_req", "w_rev")
_CATEGORY_PREFIX = "category_weight."


@dataclass
class EngineConfig:
    weights: PriorityWeights = field(default_factory=PriorityWeights)
    context_window: int = DEFAULT_CONTEXT_WINDOW
    snapshot_interval: int = DEFAULT_SNAPSHOT_INTERVAL


def _positive_int(key: str, value: str) -> int:
    try:
        parsed = int(value)
    except ValueError:
        raise ConfigError(f"{key} must be an integer, got {value!r}") from None
    if parsed < 1:
        raise ConfigError(f"{key} must be >= 1, got {parsed}")
    return parsed


def _weight(key: str, value: str) -> float:
    try:
        parsed = float(value)
    except ValueError:
        raise ConfigError(f"{key} must be a number, got {value!r}") from None
    if parsed < 0:
        raise ConfigError(f"{key} must be non-negative, got {parsed}")
    return parsed


def parse_config(text: str) -> EngineConfig:
    """Parse config text; unknown keys are an error naming the key."""
    weight_args: dict[str, float] = {}
    category_weights = dict(DEFAULT_CATEGORY_WEIGHTS)
    context_window = DEFAULT_CONTEXT_WINDOW
    snapshot_interval = DEFAULT_SNAPSHOT_INTERVAL
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected 'key = value', got {line!r}")
        key, _, value = line.partition("=")
        key = key.strip()
        value = value.strip()
        if key in _WEIGHT_KEYS:
            weight_args[key] = _weight(key, value)
        elif key.startswith(_CATEGORY_PREFIX):
            category = key[len(_CATEGORY_PREFIX) :]
            if category not in category_weights:
                raise ConfigError(f"unknown config key: {key}")
            category_weights[category] = _weight(key, value)
        elif key == "context_window":
            context_window = _positive_int(key, value)
        elif key == "snapshot_interval":
            snapshot_interval = _positive_int(key, value)
        else:
            raise ConfigError(f"unknown config key: {key}")
    weights = PriorityWeights(category_weight=category_weights, **weight_args)
    return EngineConfig(
        weights=weights, context_window=context_window, snapshot_interval=snapshot_interval
    )


def load_config(path: str | Path) -> EngineConfig:
    return parse_config(Path(path).read_text(encoding="utf-8"))
