"""Command line tests driven through click's CliRunner."""

from __future__ import annotations

from importlib import resources

import pytest
from click.testing import CliRunner

from transcenter import TranslationCenter
from transcenter.cli import main

PAGE = (
    "<nav>⟦t:menu-link⟧Browse the catalog⟦/t⟧</nav>"
    "<h1>⟦t:heading⟧Welcome translators⟦/t⟧</h1>"
    "<form>⟦t:button⟧Start translating⟦/t⟧</form>"
)

# keep the process environment out of the picture unless a test opts in
NO_ENV = {"TC_STORE": None}


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def store(tmp_path, runner):
    """A store directory with one ingested page and Spanish registered."""
    root = tmp_path / "store"
    page = tmp_path / "home.html"
    page.write_text(PAGE, encoding="utf-8")
    result = runner.invoke(
        main, ["ingest", "--store", str(root), "--page-id", "home", str(page)], env=NO_ENV
    )
    assert result.exit_code == 0, result.output
    engine = TranslationCenter.open(root)
    engine.register_language("es", "Español")
    engine.close()
    return root


class TestStoreResolution:
    def test_missing_store_is_usage_error(self, runner):
        result = runner.invoke(main, ["stats"], env=NO_ENV)
        assert result.exit_code == 2
        assert "no store directory" in result.output

    def test_env_var_supplies_store(self, runner, store):
        result = runner.invoke(main, ["stats"], env={"TC_STORE": str(store)})
        assert result.exit_code == 0
        assert "items: 3" in result.stdout

    def test_env_var_wins_over_option(self, runner, store, tmp_path):
        other = tmp_path / "other-store"
        result = runner.invoke(
            main,
            ["stats", "--store", str(other)],
            env={"TC_STORE": str(store)},
        )
        assert result.exit_code == 0
        assert "items: 3" in result.stdout
        # the ignored --store directory was never touched
        assert not other.exists()


class TestIngest:
    def test_reports_item_count(self, runner, tmp_path):
        page = tmp_path / "p.html"
        page.write_text(PAGE, encoding="utf-8")
        result = runner.invoke(
            main,
            ["ingest", "--store", str(tmp_path / "s"), "--page-id", "home", str(page)],
            env=NO_ENV,
        )
        assert result.exit_code == 0
        assert result.stdout.strip() == "ingested 3 items from page home"

    def test_marker_error_exits_nonzero(self, runner, tmp_path):
        page = tmp_path / "p.html"
        page.write_text("⟦t:button⟧never closed", encoding="utf-8")
        result = runner.invoke(
            main,
            ["ingest", "--store", str(tmp_path / "s"), "--page-id", "home", str(page)],
            env=NO_ENV,
        )
        assert result.exit_code == 1
        assert "error: UnbalancedMarker" in result.stderr


class TestExportImport:
    def test_export_source_language_to_stdout(self, runner, store):
        result = runner.invoke(main, ["export", "--store", str(store), "--language", "en"], env=NO_ENV)
        assert result.exit_code == 0
        assert '"Language: en\\n"' in result.stdout
        assert 'msgctxt "home#0"' in result.stdout

    def test_export_to_file(self, runner, store, tmp_path):
        out = tmp_path / "es.po"
        result = runner.invoke(
            main,
            ["export", "--store", str(store), "--language", "es", "-o", str(out)],
            env=NO_ENV,
        )
        assert result.exit_code == 0
        assert f"wrote {out}" in result.stdout
        assert out.read_bytes().startswith(b'msgid ""')

    def test_export_unknown_language_fails(self, runner, store):
        result = runner.invoke(main, ["export", "--store", str(store), "--language", "zz"], env=NO_ENV)
        assert result.exit_code == 1
        assert "error: UnknownLanguage" in result.stderr

    def test_import_merge_and_conflict_reporting(self, runner, store, tmp_path):
        exported = runner.invoke(
            main, ["export", "--store", str(store), "--language", "es"], env=NO_ENV
        ).stdout
        translated = exported.replace(
            'msgid "Browse the catalog"\nmsgstr ""',
            'msgid "Browse the catalog"\nmsgstr "Explora el catálogo"',
        )
        catalog = tmp_path / "es.po"
        catalog.write_text(translated, encoding="utf-8")

        first = runner.invoke(main, ["import", "--store", str(store), str(catalog)], env=NO_ENV)
        assert first.exit_code == 0
        assert "added 0, updated 1, unchanged 2, conflicts 0" in first.stdout

        again = runner.invoke(main, ["import", "--store", str(store), str(catalog)], env=NO_ENV)
        assert "added 0, updated 0, unchanged 3, conflicts 0" in again.stdout

        conflicting = translated.replace("Explora el catálogo", "Mira el catálogo")
        catalog.write_text(conflicting, encoding="utf-8")
        third = runner.invoke(main, ["import", "--store", str(store), str(catalog)], env=NO_ENV)
        assert third.exit_code == 0
        assert "conflicts 1" in third.stdout
        assert "conflict: home#0: translation differs" in third.stdout

    def test_import_parse_error_fails(self, runner, store, tmp_path):
        bad = tmp_path / "bad.po"
        bad.write_text("msgid without header\n", encoding="utf-8")
        result = runner.invoke(main, ["import", "--store", str(store), str(bad)], env=NO_ENV)
        assert result.exit_code == 1
        assert "error: ParseError" in result.stderr


class TestStats:
    def test_summary(self, runner, store):
        result = runner.invoke(main, ["stats", "--store", str(store)], env=NO_ENV)
        assert result.exit_code == 0
        assert "items: 3" in result.stdout
        assert "pages: 1" in result.stdout
        assert "languages: 1" in result.stdout
        assert "members: 0" in result.stdout

    def test_language_meter_line(self, runner, store):
        engine = TranslationCenter.open(store)
        member = engine.register_member("alice", "pw")
        items = engine.list_items()
        engine.submit_translation(member.member_id, items[0].item_id, "es", "hola")
        engine.close()

        result = runner.invoke(main, ["stats", "--store", str(store), "--language", "es"], env=NO_ENV)
        assert result.exit_code == 0
        assert result.stdout.strip() == "es: 1/3 translated (33.3%)"

    def test_unknown_language_fails(self, runner, store):
        result = runner.invoke(main, ["stats", "--store", str(store), "--language", "zz"], env=NO_ENV)
        assert result.exit_code == 1
        assert "error: UnknownLanguage" in result.stderr


class TestRubricReport:
    def test_small_fixture(self, runner, tmp_path):
        fixture = tmp_path / "eval.tsv"
        fixture.write_text(
            "Landing\ten\tsource\t-\n"
            "Landing\tes\tcommunity\t3\t3\t1\t1\t1\t1\t3\n",
            encoding="utf-8",
        )
        result = runner.invoke(main, ["rubric", "report", str(fixture)], env=NO_ENV)
        assert result.exit_code == 0
        assert "Landing" in result.stdout
        assert "community" in result.stdout
        assert "13.00  (n=1)" in result.stdout

    def test_group_by_language(self, runner, tmp_path):
        fixture = tmp_path / "eval.tsv"
        fixture.write_text("Landing\tes\tmachine\t1\t0\t0\t0\t0\t0\t0\n", encoding="utf-8")
        result = runner.invoke(
            main, ["rubric", "report", str(fixture), "--group-by", "language"], env=NO_ENV
        )
        assert result.exit_code == 0
        assert "Mean score by language" in result.stdout

    def test_packaged_fixture_means(self, runner):
        path = resources.files("transcenter").joinpath("data/evaluation_fixture.tsv")
        result = runner.invoke(main, ["rubric", "report", str(path)], env=NO_ENV)
        assert result.exit_code == 0
        lines = {line.strip() for line in result.stdout.splitlines()}
        mean_of = {
            line.split()[0]: line.split(maxsplit=1)[1]
            for line in lines
            if line and line.split()[0] in
            {"machine", "machine-roundtrip", "developer", "community"}
        }
        assert mean_of["machine"] == "1.25  (n=4)"
        assert mean_of["machine-roundtrip"] == "5.00  (n=3)"
        assert mean_of["developer"] == "13.00  (n=1)"
        assert mean_of["community"] == "13.00  (n=1)"

    def test_bad_fixture_fails(self, runner, tmp_path):
        fixture = tmp_path / "eval.tsv"
        fixture.write_text("only two\tfields\n", encoding="utf-8")
        result = runner.invoke(main, ["rubric", "report", str(fixture)], env=NO_ENV)
        assert result.exit_code == 1
        assert "error: ParseError" in result.stderr


class TestServe:
    def test_occupied_port_fails_fast(self, runner, store):
        import socket

        blocker = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
        blocker.bind(("127.0.0.1", 0))
        blocker.listen(1)
        port = blocker.getsockname()[1]
        try:
            result = runner.invoke(
                main,
                ["serve", "--store", str(store), "--port", str(port)],
                env=NO_ENV,
            )
            assert result.exit_code == 1
            assert "error: PortBindError" in result.stderr
        finally:
            blocker.close()

    def test_missing_store_is_usage_error(self, runner):
        result = runner.invoke(main, ["serve"], env=NO_ENV)
        assert result.exit_code == 2
        assert "no store directory" in result.output
