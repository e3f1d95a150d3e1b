"""The 13-point translation-quality scorecard and evaluation reporting.

Seven judged components, each with its own inclusive bound, sum to at most
13.  Evaluations record a page, a target language, and the translation
method; untranslated source pages carry no scorecard and show "-" in
reports.  Scoring is a human judgment; this module validates and reports,
it never scores text itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from statistics import mean

from .catalog import normalize_tag
from .errors import (
    EmptyText,
    MissingComponent,
    ParseError,
    ScorecardForbidden,
    ScorecardRequired,
    ScoreOutOfRange,
    UnknownComponent,
    UnknownMethod,
)

# Component name -> maximum score (minimum is always 0).
COMPONENT_BOUNDS: dict[str, int] = {
    "structure": 3,
    "vocabulary_cognates": 3,
    "vocabulary_meanings": 1,
    "vocabulary_spellings": 1,
    "style_consistency": 1,
    "style_punctuation": 1,
    "message": 3,
}

PERFECT_TOTAL = 13  # == sum(COMPONENT_BOUNDS.values())

METHODS = ("source", "machine", "developer", "community", "machine-roundtrip")


@dataclass(frozen=True)
class RubricScorecard:
    scores: tuple[tuple[str, int], ...]  # in COMPONENT_BOUNDS order
    total: int

    def as_dict(self) -> dict[str, int]:
        return dict(self.scores)

    def to_dict(self) -> dict:
        return {"scores": self.as_dict(), "total": self.total}


def new_scorecard(judgments: dict[str, int]) -> RubricScorecard:
    """Validate per-component judgments and compute the total."""
    for name in judgments:
        if name not in COMPONENT_BOUNDS:
            raise UnknownComponent(f"unknown rubric component: {name}")
    ordered: list[tuple[str, int]] = []
    for name, bound in COMPONENT_BOUNDS.items():
        if name not in judgments:
            raise MissingComponent(f"missing rubric component: {name}")
        value = judgments[name]
        if not isinstance(value, int) or isinstance(value, bool) or not 0 <= value <= bound:
            raise ScoreOutOfRange(f"{name} must be an integer in 0..{bound}, got {value!r}")
        ordered.append((name, value))
    return RubricScorecard(scores=tuple(ordered), total=sum(v for _, v in ordered))


@dataclass
class EvaluationRecord:
    record_id: str
    page_label: str
    language: str
    method: str
    scorecard: RubricScorecard | None
    evaluator: str
    timestamp: float

    @property
    def total(self) -> int | None:
        return None if self.scorecard is None else self.scorecard.total

    def to_dict(self) -> dict:
        return {
            "record_id": self.record_id,
            "page_label": self.page_label,
            "language": self.language,
            "method": self.method,
            "scorecard": None if self.scorecard is None else self.scorecard.to_dict(),
            "evaluator": self.evaluator,
            "timestamp": self.timestamp,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "EvaluationRecord":
        scorecard = None
        if d["scorecard"] is not None:
            scorecard = new_scorecard(d["scorecard"]["scores"])
        return cls(
            record_id=d["record_id"],
            page_label=d["page_label"],
            language=d["language"],
            method=d["method"],
            scorecard=scorecard,
            evaluator=d["evaluator"],
            timestamp=d["timestamp"],
        )


def build_record(
    record_id: str,
    page_label: str,
    language: str,
    method: str,
    judgments: dict[str, int] | None,
    evaluator: str,
    timestamp: float,
) -> EvaluationRecord:
    if method not in METHODS:
        raise UnknownMethod(f"method must be one of {', '.join(METHODS)}; got {method!r}")
    if not page_label.strip():
        raise EmptyText("page label must be non-empty")
    if method == "source":
        if judgments is not None:
            raise ScorecardForbidden("source rows carry no scorecard")
        scorecard = None
    else:
        if judgments is None:
            raise ScorecardRequired(f"method {method} requires a scorecard")
        scorecard = new_scorecard(judgments)
    return EvaluationRecord(
        record_id=record_id,
        page_label=page_label,
        language=normalize_tag(language),
        method=method,
        scorecard=scorecard,
        evaluator=evaluator,
        timestamp=timestamp,
    )


class RubricStore:
    def __init__(self):
        self.records: list[EvaluationRecord] = []
        self._record_seq = 0

    def record(
        self,
        page_label: str,
        language: str,
        method: str,
        judgments: dict[str, int] | None,
        evaluator: str,
        timestamp: float,
    ) -> EvaluationRecord:
        record = build_record(
            record_id=f"ev-{self._record_seq + 1:06d}",
            page_label=page_label,
            language=language,
            method=method,
            judgments=judgments,
            evaluator=evaluator,
            timestamp=timestamp,
        )
        self._record_seq += 1
        self.records.append(record)
        return record

    def state_dict(self) -> dict:
        return {"records": [r.to_dict() for r in self.records], "record_seq": self._record_seq}

    def load_state(self, d: dict) -> None:
        self.records = [EvaluationRecord.from_dict(r) for r in d["records"]]
        self._record_seq = d["record_seq"]


# -- reporting ---------------------------------------------------------------

GROUP_FIELDS = {"method": "method", "language": "language", "page": "page_label"}


@dataclass
class RubricReport:
    group_by: str
    rows: list[dict]
    means: list[dict]


def report(records: list[EvaluationRecord], group_by: str = "method") -> RubricReport:
    """Rows sorted by record id plus per-group mean totals, source rows
    excluded from the means."""
    if group_by not in GROUP_FIELDS:
        raise ValueError(f"group_by must be one of {sorted(GROUP_FIELDS)}")
    field = GROUP_FIELDS[group_by]
    ordered = sorted(records, key=lambda r: r.record_id)
    rows = [
        {
            "record_id": r.record_id,
            "page_label": r.page_label,
            "language": r.language,
            "method": r.method,
            "total": r.total,
        }
        for r in ordered
    ]
    groups: dict[str, list[int]] = {}
    for record in ordered:
        if record.method == "source":
            continue
        groups.setdefault(getattr(record, field), []).append(record.total)
    means = [
        {"group": group, "count": len(totals), "mean": mean(totals)}
        for group, totals in groups.items()
    ]
    return RubricReport(group_by=group_by, rows=rows, means=means)


def render_report(rep: RubricReport) -> str:
    lines = [f"{'#':<4}{'Page':<22}{'Language':<10}{'Method':<20}Score"]
    for index, row in enumerate(rep.rows, start=1):
        total = "-" if row["total"] is None else str(row["total"])
        lines.append(
            f"{index:<4}{row['page_label']:<22}{row['language']:<10}{row['method']:<20}{total}"
        )
    if rep.means:
        lines.append("")
        lines.append(f"Mean score by {rep.group_by} (source rows excluded):")
        for entry in rep.means:
            lines.append(f"  {entry['group']:<20}{entry['mean']:.2f}  (n={entry['count']})")
    return "\n".join(lines) + "\n"


# -- fixture files -----------------------------------------------------------

def parse_fixture(text: str) -> list[dict]:
    """Parse a tab-separated evaluation fixture.

    Per line: page_label, language, method, then either the seven component
    scores in rubric order or a single "-" for source rows.  Blank lines and
    ``#`` comments are skipped.
    """
    rows: list[dict] = []
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.rstrip("\r")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) < 4:
            raise ParseError("expected page, language, method and scores", lineno)
        page_label, language, method = fields[0], fields[1], fields[2]
        rest = fields[3:]
        if rest == ["-"]:
            judgments = None
        elif len(rest) == len(COMPONENT_BOUNDS):
            try:
                values = [int(v) for v in rest]
            except ValueError:
                raise ParseError("component scores must be integers", lineno) from None
            judgments = dict(zip(COMPONENT_BOUNDS.keys(), values))
        else:
            raise ParseError(
                f"expected {len(COMPONENT_BOUNDS)} component scores or '-'", lineno
            )
        rows.append(
            {"page_label": page_label, "language": language, "method": method, "judgments": judgments}
        )
    return rows


def records_from_fixture(text: str, evaluator: str = "fixture") -> list[EvaluationRecord]:
    records = []
    for index, row in enumerate(parse_fixture(text), start=1):
        records.append(
            build_record(
                record_id=f"ev-{index:06d}",
                page_label=row["page_label"],
                language=row["language"],
                method=row["method"],
                judgments=row["judgments"],
                evaluator=evaluator,
                timestamp=0.0,
            )
        )
    return records
