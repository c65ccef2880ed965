"""Command-line interface: serve, replay, framework, analogy, quiz."""
from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from . import analogy as analogy_mod
from . import replay as replay_mod
from . import report
from .analogy import ConceptKind, QCConcept
from .lessons import load_quiz, grade
from .qcore import GateLabel


@click.group()
def main():
    """Quantum-concept lessons: session service, headless replay, and framework tools."""


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8000, show_default=True, type=int)
@click.option("--store", type=click.Path(file_okay=False), default=None,
              help="Directory for append-only session records.")
@click.option("--idle-timeout", default=1800.0, show_default=True, type=float,
              help="Seconds before an idle session is reaped.")
def serve(host, port, store, idle_timeout):
    """Run the session service (HTTP + WebSocket)."""
    import uvicorn

    from .service import create_app

    app = create_app(store_dir=store, idle_timeout=idle_timeout)
    uvicorn.run(app, host=host, port=port)


@main.command()
@click.option("--script", "script_path", required=True,
              type=click.Path(exists=False, dir_okay=False))
@click.option("--seed", required=True, type=int)
@click.option("--out", "out_path", type=click.Path(dir_okay=False), default=None,
              help="Also write the transcript to this file.")
@click.option("--report-dir", type=click.Path(file_okay=False), default=None,
              help="Write panel_updates.csv and panel_updates.png here.")
def replay(script_path, seed, out_path, report_dir):
    """Run a scripted transcript headlessly and print the output events."""
    try:
        script = replay_mod.load_script(script_path)
    except (OSError, replay_mod.ScriptError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)
    outputs = replay_mod.run_script(script, seed)
    lines = [replay_mod.transcript_line(i, ev) for i, ev in enumerate(outputs)]
    for line in lines:
        click.echo(line)
    if out_path:
        Path(out_path).write_text("".join(line + "\n" for line in lines), encoding="utf-8")
    if report_dir:
        paths = report.write_replay_report(outputs, report_dir)
        for path in paths:
            click.echo(f"wrote {path}", err=True)


@main.group()
def framework():
    """Concept characterization framework."""


@framework.command("table")
@click.option("--figure", type=click.Path(dir_okay=False), default=None,
              help="Also render the table to an image file.")
@click.option("--csv", "csv_path", type=click.Path(dir_okay=False), default=None,
              help="Also write the table as CSV.")
def framework_table(figure, csv_path):
    """Print the characterization rows for all concepts."""
    rows = [report.FRAMEWORK_HEADER, *report.framework_rows()]
    widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
    for row in rows:
        click.echo("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
    if csv_path:
        report.write_framework_csv(csv_path)
        click.echo(f"wrote {csv_path}", err=True)
    if figure:
        report.render_framework_figure(figure)
        click.echo(f"wrote {figure}", err=True)


@main.group()
def analogy():
    """Daily-object analogy queries."""


def _parse_concept(name: str, gate: str | None) -> QCConcept:
    try:
        kind = ConceptKind(name)
    except ValueError:
        raise click.BadParameter(
            f"unknown concept {name!r}; one of {[c.value for c in ConceptKind]}"
        )
    if kind == ConceptKind.GATE:
        if gate is None:
            raise click.BadParameter("Gate concepts need --gate")
        try:
            return QCConcept(kind, GateLabel(gate))
        except ValueError:
            raise click.BadParameter(f"unknown gate label {gate!r}")
    return QCConcept(kind)


@analogy.command("validate")
@click.option("--concept", required=True)
@click.option("--gate", default=None, help="Gate label when --concept Gate.")
@click.option("--object", "object_id", required=True)
@click.option("--catalog", "catalog_path", type=click.Path(dir_okay=False), default=None,
              help="Catalog file (defaults to the shipped catalog).")
def analogy_validate(concept, gate, object_id, catalog_path):
    """Check whether a catalog object is a valid analogy for a concept."""
    qc = _parse_concept(concept, gate)
    try:
        catalog = (
            analogy_mod.load_catalog(catalog_path)
            if catalog_path
            else analogy_mod.default_catalog()
        )
    except (OSError, analogy_mod.CatalogError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)
    obj = next((o for o in catalog if o.id == object_id), None)
    if obj is None:
        click.echo(f"error: unknown object id {object_id!r}", err=True)
        sys.exit(1)
    rep = analogy_mod.validate_analogy(qc, obj)
    click.echo(json.dumps({
        "valid": rep.valid,
        "per_dimension": [
            {
                "dimension": c.dimension,
                "required": getattr(c.required, "value", c.required),
                "actual": getattr(c.actual, "value", c.actual),
                "satisfied": c.satisfied,
            }
            for c in rep.per_dimension
        ],
    }, indent=2))
    sys.exit(0 if rep.valid else 2)


@analogy.command("suggest")
@click.option("--concept", required=True)
@click.option("--gate", default=None)
@click.option("--catalog", "catalog_path", type=click.Path(dir_okay=False), default=None)
def analogy_suggest(concept, gate, catalog_path):
    """List catalog objects that are valid analogies for a concept."""
    qc = _parse_concept(concept, gate)
    catalog = (
        analogy_mod.load_catalog(catalog_path)
        if catalog_path
        else analogy_mod.default_catalog()
    )
    for obj in analogy_mod.suggest_objects(qc, catalog):
        click.echo(f"{obj.id}\t{obj.name}")


@main.group()
def quiz():
    """Quiz tools."""


@quiz.command("grade")
@click.option("--answers", required=True,
              help="Comma-separated choice indices, one per question.")
def quiz_grade(answers):
    """Grade a comma-separated answer list against the shipped quiz."""
    try:
        parsed = [int(a) for a in answers.split(",")]
    except ValueError:
        click.echo("error: answers must be comma-separated integers", err=True)
        sys.exit(1)
    items = load_quiz()
    try:
        result = grade(items, parsed)
    except ValueError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)
    for item_id, ok in result.per_item:
        click.echo(f"{item_id}\t{'correct' if ok else 'wrong'}")
    click.echo(f"score\t{result.score}/{result.total}")


if __name__ == "__main__":
    main()
