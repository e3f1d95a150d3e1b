from __future__ import annotations

import pytest

from transcenter.config import parse_config
from transcenter.errors import ConfigError


class TestParseConfig:
    def test_defaults(self):
        config = parse_config("")
        assert config.weights.w_cat == 2.0
        assert config.weights.w_req == 1.5
        assert config.context_window == 120
        assert config.snapshot_interval == 500

    def test_full_file(self):
        config = parse_config(
            "# tuning\n"
            "w_cat = 4\n"
            "w_view = 0.5\n"
            "w_req = 2\n"
            "w_rev = 0\n"
            "category_weight.menu-link = 10\n"
            "context_window = 40\n"
            "snapshot_interval = 25\n"
        )
        assert config.weights.w_cat == 4.0
        assert config.weights.w_view == 0.5
        assert config.weights.w_rev == 0.0
        assert config.weights.category_weight["menu-link"] == 10.0
        assert config.weights.category_weight["button"] == 2.0
        assert config.context_window == 40
        assert config.snapshot_interval == 25

    def test_unknown_key_named(self):
        with pytest.raises(ConfigError) as exc:
            parse_config("w_cat = 1\nmystery_knob = 3\n")
        assert "mystery_knob" in str(exc.value)

    def test_unknown_category_named(self):
        with pytest.raises(ConfigError) as exc:
            parse_config("category_weight.sidebar = 3\n")
        assert "category_weight.sidebar" in str(exc.value)

    @pytest.mark.parametrize(
        "line",
        [
            "w_cat = fast",
            "w_view = -1",
            "context_window = 0",
            "context_window = ten",
            "snapshot_interval = -5",
            "just some words",
        ],
    )
    def test_bad_values(self, line):
        with pytest.raises(ConfigError):
            parse_config(line + "\n")
