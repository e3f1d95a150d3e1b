"""The ``tc`` command line tool.

Serving and catalog administration (ingest, import, export) share one store
directory; the single-writer lock means administration happens while the
server is stopped.  ``TC_STORE`` in the environment overrides a ``--store``
option wherever one is accepted.
"""

from __future__ import annotations

import os
import socket
import sys
from pathlib import Path

import click

from .center import TranslationCenter
from .config import EngineConfig, load_config
from .errors import PortBindError, TranslationCenterError
from .rubric import records_from_fixture, render_report
from .rubric import report as build_report


def _resolve_store(option_value: str | None) -> Path:
    env = os.environ.get("TC_STORE")
    if env:
        return Path(env)
    if option_value:
        return Path(option_value)
    raise click.UsageError("no store directory: pass --store or set TC_STORE")


def _fail(exc: TranslationCenterError) -> "click.exceptions.Exit":
    click.echo(f"error: {exc.name}: {exc}", err=True)
    sys.exit(1)


@click.group()
def main():
    """Community translation center."""


@main.command()
@click.option("--store", "store_opt", type=click.Path(), help="Store directory.")
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8787, show_default=True, type=int)
@click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False))
def serve(store_opt, host, port, config_path):
    """Run the HTTP service."""
    import uvicorn

    from .api import create_app

    store_dir = _resolve_store(store_opt)
    try:
        config = load_config(config_path) if config_path else EngineConfig()
        probe = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
        probe.setsockopt(socket.SOL_SOCKET, socket.SO_REUSEADDR, 1)
        try:
            probe.bind((host, port))
        except OSError as exc:
            raise PortBindError(f"cannot bind {host}:{port}: {exc}") from None
        finally:
            probe.close()
        engine = TranslationCenter.open(store_dir, config)
    except TranslationCenterError as exc:
        _fail(exc)
    try:
        click.echo(f"serving on http://{host}:{port} (store: {store_dir})")
        uvicorn.run(create_app(engine), host=host, port=port, log_level="warning")
    finally:
        engine.close()


@main.command()
@click.option("--store", "store_opt", type=click.Path(), help="Store directory.")
@click.option("--page-id", required=True, help="Page the items belong to.")
@click.argument("source_file", type=click.Path(exists=True, dir_okay=False))
def ingest(store_opt, page_id, source_file):
    """Extract translatable items from a marked-up page file."""
    store_dir = _resolve_store(store_opt)
    text = Path(source_file).read_text(encoding="utf-8")
    try:
        engine = TranslationCenter.open(store_dir)
    except TranslationCenterError as exc:
        _fail(exc)
    try:
        items = engine.ingest_page(page_id, text)
        click.echo(f"ingested {len(items)} items from page {page_id}")
    except TranslationCenterError as exc:
        _fail(exc)
    finally:
        engine.close()


@main.command()
@click.option("--store", "store_opt", type=click.Path(), help="Store directory.")
@click.option("--language", required=True, help="Catalog language to export.")
@click.option("-o", "--output", type=click.Path(), help="Write here instead of stdout.")
def export(store_opt, language, output):
    """Write the catalog for one language in exchange format."""
    store_dir = _resolve_store(store_opt)
    try:
        engine = TranslationCenter.open(store_dir)
    except TranslationCenterError as exc:
        _fail(exc)
    try:
        text = engine.export_catalog(language)
    except TranslationCenterError as exc:
        _fail(exc)
    finally:
        engine.close()
    data = text.encode("utf-8")
    if output:
        Path(output).write_bytes(data)
        click.echo(f"wrote {output}")
    else:
        sys.stdout.buffer.write(data)


@main.command("import")
@click.option("--store", "store_opt", type=click.Path(), help="Store directory.")
@click.argument("catalog_file", type=click.Path(exists=True, dir_okay=False))
def import_(store_opt, catalog_file):
    """Merge an exchange-format catalog file into the store."""
    store_dir = _resolve_store(store_opt)
    data = Path(catalog_file).read_bytes()
    try:
        engine = TranslationCenter.open(store_dir)
    except TranslationCenterError as exc:
        _fail(exc)
    try:
        report = engine.import_catalog(data)
    except TranslationCenterError as exc:
        _fail(exc)
    finally:
        engine.close()
    click.echo(
        f"added {report.added}, updated {report.updated}, "
        f"unchanged {report.unchanged}, conflicts {report.conflict_count}"
    )
    for conflict in report.conflicts:
        click.echo(f"  conflict: {conflict['key']}: {conflict['reason']}")


@main.command()
@click.option("--store", "store_opt", type=click.Path(), help="Store directory.")
@click.option("--language", help="Show progress for one language.")
def stats(store_opt, language):
    """Summarize the store, or one language's progress."""
    store_dir = _resolve_store(store_opt)
    try:
        engine = TranslationCenter.open(store_dir)
    except TranslationCenterError as exc:
        _fail(exc)
    try:
        if language:
            meter = engine.compute_meter(language)
            click.echo(
                f"{meter.language}: {meter.translated}/{meter.total} translated "
                f"({meter.percent:.1f}%)"
            )
        else:
            items = engine.list_items()
            pages = {item.page_id for item in items}
            click.echo(f"items: {len(items)}")
            click.echo(f"pages: {len(pages)}")
            click.echo(f"languages: {len(engine.list_languages())}")
            click.echo(f"members: {len(engine.members.members)}")
    except TranslationCenterError as exc:
        _fail(exc)
    finally:
        engine.close()


@main.group()
def rubric():
    """Translation quality evaluations."""


@rubric.command("report")
@click.argument("fixture_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--group-by", default="method", show_default=True,
              type=click.Choice(["method", "language", "page"]))
def rubric_report(fixture_file, group_by):
    """Score a tab-separated evaluation fixture and print the report."""
    text = Path(fixture_file).read_text(encoding="utf-8")
    try:
        records = records_from_fixture(text)
    except TranslationCenterError as exc:
        _fail(exc)
    click.echo(render_report(build_report(records, group_by)), nl=False)


if __name__ == "__main__":
    main()
