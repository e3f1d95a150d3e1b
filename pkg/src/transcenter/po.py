"""Catalog exchange format: PO-compatible, UTF-8, LF line endings.

One header record (empty msgid, ``Language: <tag>`` in the msgstr) followed
by one record per item, records separated by a single blank line:

    #: <page_id>
    #, category=<category>
    #. ctx=<start>,<end>
    msgctxt "<key>"
    msgid "<source_text>"
    msgstr "<translation or empty>"

Strings are single-line with C-style escapes for ``"``, ``\\``, newline and
tab.  The parser accepts exactly what the renderer emits, so an exported
catalog re-imports and re-exports byte-identically.
"""

from __future__ import annotations

from dataclasses import dataclass

from .catalog import CATEGORIES
from .errors import EncodingError, ParseError

_ESCAPES = {"\\": "\\\\", '"': '\\"', "\n": "\\n", "\t": "\\t"}
_UNESCAPES = {"\\": "\\", '"': '"', "n": "\n", "t": "\t"}


def escape(text: str) -> str:
    out = []
    for ch in text:
        out.append(_ESCAPES.get(ch, ch))
    return "".join(out)


def unescape(text: str, line: int) -> str:
    out = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "\\":
            if i + 1 >= len(text) or text[i + 1] not in _UNESCAPES:
                raise ParseError("malformed escape sequence", line)
            out.append(_UNESCAPES[text[i + 1]])
            i += 2
        elif ch == '"':
            raise ParseError("unescaped quote inside string", line)
        else:
            out.append(ch)
            i += 1
    return "".join(out)


@dataclass
class PoRecord:
    page_id: str
    category: str
    start: int
    end: int
    key: str
    source_text: str
    translation: str


@dataclass
class ParsedCatalog:
    language: str
    records: list[PoRecord]


def render_record(record: PoRecord) -> str:
    return (
        f"#: {record.page_id}\n"
        f"#, category={record.category}\n"
        f"#. ctx={record.start},{record.end}\n"
        f'msgctxt "{escape(record.key)}"\n'
        f'msgid "{escape(record.source_text)}"\n'
        f'msgstr "{escape(record.translation)}"\n'
    )


def render(language: str, records: list[PoRecord]) -> str:
    parts = ['msgid ""\n', f'msgstr "{escape(f"Language: {language}")}\\n"\n']
    for record in records:
        parts.append("\n")
        parts.append(render_record(record))
    return "".join(parts)


def decode(data: bytes) -> str:
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise EncodingError(f"catalog file is not valid UTF-8: {exc}") from exc


class _Lines:
    def __init__(self, text: str):
        self.lines = text.split("\n")
        # A trailing newline produces one empty trailing element; drop it so
        # "end of file" is unambiguous.
        if self.lines and self.lines[-1] == "":
            self.lines.pop()
        self.pos = 0

    @property
    def lineno(self) -> int:
        return self.pos + 1

    def at_end(self) -> bool:
        return self.pos >= len(self.lines)

    def peek(self) -> str:
        return self.lines[self.pos]

    def take(self) -> str:
        line = self.lines[self.pos]
        self.pos += 1
        return line


def _take_quoted(lines: _Lines, prefix: str) -> str:
    lineno = lines.lineno
    if lines.at_end():
        raise ParseError(f"expected {prefix} line", lineno)
    line = lines.take()
    if len(line) < len(prefix) + 3 or not line.startswith(prefix + ' "') or not line.endswith('"'):
        raise ParseError(f"expected {prefix} \"...\"", lineno)
    return unescape(line[len(prefix) + 2 : -1], lineno)


def _take_prefixed(lines: _Lines, prefix: str) -> str:
    lineno = lines.lineno
    if lines.at_end():
        raise ParseError(f"expected {prefix!r} line", lineno)
    line = lines.take()
    if not line.startswith(prefix):
        raise ParseError(f"expected line starting with {prefix!r}", lineno)
    return line[len(prefix) :]


def parse(text: str) -> ParsedCatalog:
    """Parse exchange-format text; raises ParseError with a line number."""
    lines = _Lines(text)
    header_msgid = _take_quoted(lines, "msgid")
    if header_msgid != "":
        raise ParseError("header msgid must be empty", lines.lineno - 1)
    header = _take_quoted(lines, "msgstr")
    if not header.startswith("Language: ") or not header.endswith("\n"):
        raise ParseError("header msgstr must carry 'Language: <tag>'", lines.lineno - 1)
    language = header[len("Language: ") : -1]

    records: list[PoRecord] = []
    seen_keys: set[str] = set()
    while not lines.at_end():
        if lines.take() != "":
            raise ParseError("records must be separated by one blank line", lines.lineno - 1)
        if lines.at_end():
            raise ParseError("blank line at end of file", lines.lineno)
        page_id = _take_prefixed(lines, "#: ")
        category = _take_prefixed(lines, "#, category=")
        if category not in CATEGORIES:
            raise ParseError(f"unknown category: {category}", lines.lineno - 1)
        ctx_lineno = lines.lineno
        ctx = _take_prefixed(lines, "#. ctx=")
        try:
            start_text, end_text = ctx.split(",", 1)
            start, end = int(start_text), int(end_text)
        except ValueError:
            raise ParseError("malformed ctx offsets", ctx_lineno) from None
        key_lineno = lines.lineno
        key = _take_quoted(lines, "msgctxt")
        source_text = _take_quoted(lines, "msgid")
        translation = _take_quoted(lines, "msgstr")
        if not (0 <= start < end) or end - start != len(source_text):
            raise ParseError("ctx offsets do not span the source text", ctx_lineno)
        if key in seen_keys:
            raise ParseError(f"duplicate key: {key}", key_lineno)
        seen_keys.add(key)
        records.append(
            PoRecord(
                page_id=page_id,
                category=category,
                start=start,
                end=end,
                key=key,
                source_text=source_text,
                translation=translation,
            )
        )
    return ParsedCatalog(language=language, records=records)
