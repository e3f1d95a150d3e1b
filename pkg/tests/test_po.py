from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from transcenter import po
from transcenter.errors import EncodingError, ParseError

HEADER = 'msgid ""\nmsgstr "Language: es\\n"\n'

RECORD = (
    "\n#: home\n#, category=button\n#. ctx=4,8\n"
    'msgctxt "home#0"\nmsgid "Save"\nmsgstr "Guardar"\n'
)


def record(**overrides) -> po.PoRecord:
    base = dict(
        page_id="home",
        category="button",
        start=4,
        end=8,
        key="home#0",
        source_text="Save",
        translation="Guardar",
    )
    base.update(overrides)
    return po.PoRecord(**base)


class TestEscape:
    @pytest.mark.parametrize(
        "raw,escaped",
        [
            ('say "hi"', 'say \\"hi\\"'),
            ("back\\slash", "back\\\\slash"),
            ("two\nlines", "two\\nlines"),
            ("tab\there", "tab\\there"),
            ("plain", "plain"),
        ],
    )
    def test_roundtrip(self, raw, escaped):
        assert po.escape(raw) == escaped
        assert po.unescape(escaped, line=1) == raw

    def test_bad_escape_sequence(self):
        with pytest.raises(ParseError):
            po.unescape("bad \\x", line=3)


class TestRender:
    def test_full_document(self):
        assert po.render("es", [record()]) == HEADER + RECORD

    def test_lf_only(self):
        text = po.render("es", [record(), record(key="home#1", start=10, end=14)])
        assert "\r" not in text
        assert text.endswith("\n")


class TestParse:
    def test_roundtrip_document(self):
        parsed = po.parse(HEADER + RECORD)
        assert parsed.language == "es"
        assert parsed.records == [record()]

    def test_untranslated_record(self):
        parsed = po.parse(po.render("es", [record(translation="")]))
        assert parsed.records[0].translation == ""

    def test_decode_rejects_bad_utf8(self):
        with pytest.raises(EncodingError):
            po.decode(b"\xff\xfe garbage")

    def test_missing_header(self):
        with pytest.raises(ParseError):
            po.parse(RECORD.lstrip("\n"))

    def test_bad_category(self):
        bad = (HEADER + RECORD).replace("category=button", "category=sidebar")
        with pytest.raises(ParseError) as exc:
            po.parse(bad)
        assert "category" in str(exc.value)

    def test_ctx_length_mismatch(self):
        bad = (HEADER + RECORD).replace("ctx=4,8", "ctx=4,9")
        with pytest.raises(ParseError) as exc:
            po.parse(bad)
        assert exc.value.line == 6

    def test_duplicate_keys(self):
        text = po.render("es", [record(), record(start=10, end=14)])
        with pytest.raises(ParseError):
            po.parse(text)

    def test_unterminated_quote(self):
        bad = (HEADER + RECORD).replace('msgid "Save"', 'msgid "Save')
        with pytest.raises(ParseError):
            po.parse(bad)

    def test_missing_blank_separator(self):
        text = HEADER + RECORD + RECORD.replace("home#0", "home#1").lstrip("\n")
        with pytest.raises(ParseError):
            po.parse(text)

    def test_field_order_enforced(self):
        scrambled = HEADER + (
            "\n#, category=button\n#: home\n#. ctx=4,8\n"
            'msgctxt "home#0"\nmsgid "Save"\nmsgstr "Guardar"\n'
        )
        with pytest.raises(ParseError):
            po.parse(scrambled)


_content = st.text(
    alphabet=st.characters(blacklist_categories=("Cs",), blacklist_characters="\r"),
    min_size=1,
    max_size=30,
)
_page = st.text(alphabet="abcdefg hij-_.",  min_size=1, max_size=10)


@st.composite
def _records(draw):
    texts = draw(st.lists(_content, min_size=1, max_size=6))
    records = []
    for index, text in enumerate(texts):
        start = draw(st.integers(min_value=0, max_value=50))
        records.append(
            po.PoRecord(
                page_id=draw(_page),
                category=draw(st.sampled_from(po.CATEGORIES)),
                start=start,
                end=start + len(text),
                key=f"k#{index}",
                source_text=text,
                translation=draw(st.one_of(st.just(""), _content)),
            )
        )
    return records


@settings(max_examples=60, deadline=None)
@given(_records())
def test_parse_inverts_render(records):
    text = po.render("pt-BR", records)
    parsed = po.parse(text)
    assert parsed.language == "pt-BR"
    assert parsed.records == records
    assert po.render(parsed.language, parsed.records) == text
