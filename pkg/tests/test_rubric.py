from __future__ import annotations

import pytest

from transcenter.errors import (
    EmptyText,
    MissingComponent,
    ParseError,
    ScorecardForbidden,
    ScorecardRequired,
    ScoreOutOfRange,
    UnknownComponent,
    UnknownMethod,
)
from transcenter.rubric import (
    COMPONENT_BOUNDS,
    PERFECT_TOTAL,
    build_record,
    new_scorecard,
    parse_fixture,
    records_from_fixture,
    render_report,
    report,
)

FULL = {
    "structure": 3,
    "vocabulary_cognates": 3,
    "vocabulary_meanings": 1,
    "vocabulary_spellings": 1,
    "style_consistency": 1,
    "style_punctuation": 1,
    "message": 3,
}


class TestScorecard:
    def test_perfect_total(self):
        assert new_scorecard(FULL).total == PERFECT_TOTAL == 13

    def test_bounds_per_component(self):
        for name, bound in COMPONENT_BOUNDS.items():
            with pytest.raises(ScoreOutOfRange):
                new_scorecard({**FULL, name: bound + 1})
            with pytest.raises(ScoreOutOfRange):
                new_scorecard({**FULL, name: -1})

    def test_non_integers_rejected(self):
        with pytest.raises(ScoreOutOfRange):
            new_scorecard({**FULL, "message": 1.5})
        with pytest.raises(ScoreOutOfRange):
            new_scorecard({**FULL, "message": True})

    def test_missing_and_unknown_components(self):
        partial = dict(FULL)
        del partial["message"]
        with pytest.raises(MissingComponent):
            new_scorecard(partial)
        with pytest.raises(UnknownComponent):
            new_scorecard({**FULL, "charm": 1})


class TestBuildRecord:
    def test_source_carries_no_scorecard(self):
        record = build_record("ev-1", "Home", "en", "source", None, "e", 0.0)
        assert record.scorecard is None
        assert record.total is None

    def test_source_with_scores_rejected(self):
        with pytest.raises(ScorecardForbidden):
            build_record("ev-1", "Home", "en", "source", FULL, "e", 0.0)

    def test_non_source_requires_scores(self):
        with pytest.raises(ScorecardRequired):
            build_record("ev-1", "Home", "es", "machine", None, "e", 0.0)

    def test_unknown_method(self):
        with pytest.raises(UnknownMethod):
            build_record("ev-1", "Home", "es", "telepathy", FULL, "e", 0.0)

    def test_blank_page_label(self):
        with pytest.raises(EmptyText):
            build_record("ev-1", "  ", "es", "machine", FULL, "e", 0.0)


class TestReport:
    def make_records(self):
        rows = [
            ("Home", "en", "source", None),
            ("Home", "es", "machine", {**FULL, "structure": 0, "message": 0}),
            ("Docs", "es", "developer", FULL),
            ("Docs", "es", "machine", {**FULL, "vocabulary_cognates": 0}),
        ]
        return [
            build_record(f"ev-{i:06d}", page, lang, method, judgments, "e", 0.0)
            for i, (page, lang, method, judgments) in enumerate(rows, start=1)
        ]

    def test_group_by_method_excludes_source(self):
        rep = report(self.make_records(), "method")
        means = {m["group"]: (m["count"], m["mean"]) for m in rep.means}
        assert means == {"machine": (2, 8.5), "developer": (1, 13)}
        assert [r["record_id"] for r in rep.rows] == [f"ev-{i:06d}" for i in range(1, 5)]

    def test_group_by_language_and_page(self):
        records = self.make_records()
        assert {m["group"] for m in report(records, "language").means} == {"es"}
        assert {m["group"] for m in report(records, "page").means} == {"Home", "Docs"}

    def test_bad_group(self):
        with pytest.raises(ValueError):
            report([], "color")

    def test_render_shows_dash_for_source(self):
        rendered = render_report(report(self.make_records(), "method"))
        lines = rendered.splitlines()
        assert lines[1].endswith("-")
        assert "Mean score by method (source rows excluded):" in rendered


class TestFixtureParsing:
    def test_parses_scores_and_dashes(self):
        rows = parse_fixture("# comment\nHome\ten\tsource\t-\nHome\tes\tmachine\t1\t0\t0\t0\t0\t0\t0\n")
        assert rows[0]["judgments"] is None
        assert rows[1]["judgments"]["structure"] == 1

    def test_wrong_arity(self):
        with pytest.raises(ParseError) as exc:
            parse_fixture("Home\tes\tmachine\t1\t2\n")
        assert exc.value.line == 1

    def test_non_integer_scores(self):
        with pytest.raises(ParseError):
            parse_fixture("Home\tes\tmachine\tx\t0\t0\t0\t0\t0\t0\n")

    def test_short_line(self):
        with pytest.raises(ParseError):
            parse_fixture("Home\tes\n")

    def test_records_from_fixture_ids(self):
        records = records_from_fixture("Home\ten\tsource\t-\nHome\tes\tdeveloper" + "\t3" * 2 + "\t1" * 4 + "\t3\n")
        assert [r.record_id for r in records] == ["ev-000001", "ev-000002"]
        assert records[1].total == 13
