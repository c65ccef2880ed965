"""Report rendering: delimited summaries plus matplotlib figures.

Used by the CLI's report paths; figures are written to files with the Agg
backend so no display is needed.
"""
from __future__ import annotations

import csv
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from . import analogy
from .analogy import ConceptKind, QCConcept
from .lessons import OutputEvent, PanelUpdate
from .qcore import GateLabel

FRAMEWORK_CONCEPTS: list[tuple[str, QCConcept]] = [
    ("Superposition", QCConcept(ConceptKind.SUPERPOSITION)),
    ("Measurement", QCConcept(ConceptKind.MEASUREMENT)),
    ("Decoherence", QCConcept(ConceptKind.DECOHERENCE)),
    ("Tunneling", QCConcept(ConceptKind.TUNNELING)),
    ("Teleportation", QCConcept(ConceptKind.TELEPORTATION)),
    ("Entanglement", QCConcept(ConceptKind.ENTANGLEMENT)),
    ("Gate (1-qubit)", QCConcept(ConceptKind.GATE, GateLabel.HADAMARD)),
    ("Gate (CNOT)", QCConcept(ConceptKind.GATE, GateLabel.CNOT)),
    ("Gate (CSwap)", QCConcept(ConceptKind.GATE, GateLabel.CSWAP)),
]

FRAMEWORK_HEADER = [
    "concept",
    "num_qubits",
    "duality",
    "concept_type",
    "probability",
    "num_objects",
    "rotation",
    "translation",
    "continuity",
]


def framework_rows() -> list[list[str]]:
    """Characterization plus derived object requirements, one row per concept."""
    rows = []
    for name, concept in FRAMEWORK_CONCEPTS:
        c = analogy.characterize(concept)
        p = analogy.required_properties(c)
        rows.append([
            name,
            str(c.num_qubits),
            c.duality.value,
            c.concept_type.value,
            c.probability.value,
            str(p.num_objects),
            "yes" if p.rotation else "no",
            "yes" if p.translation else "no",
            p.continuity.value,
        ])
    return rows


def write_framework_csv(path: str | Path) -> None:
    with Path(path).open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(FRAMEWORK_HEADER)
        writer.writerows(framework_rows())


def render_framework_figure(path: str | Path) -> None:
    rows = framework_rows()
    fig, ax = plt.subplots(figsize=(12, 0.5 * len(rows) + 1.5))
    ax.axis("off")
    table = ax.table(
        cellText=rows,
        colLabels=FRAMEWORK_HEADER,
        loc="center",
        cellLoc="center",
    )
    table.auto_set_font_size(False)
    table.set_fontsize(9)
    table.scale(1.0, 1.4)
    ax.set_title("Concept characterization and required object properties")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def panel_history(outputs: list[OutputEvent]) -> list[PanelUpdate]:
    return [ev for ev in outputs if isinstance(ev, PanelUpdate)]


def write_panel_csv(outputs: list[OutputEvent], path: str | Path) -> None:
    with Path(path).open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["update", "label", "probability"])
        for i, panel in enumerate(panel_history(outputs)):
            for label, prob in zip(panel.labels, panel.probabilities):
                writer.writerow([i, label, repr(prob)])


def render_panel_figure(outputs: list[OutputEvent], path: str | Path) -> None:
    """Probability of each panel label across successive panel updates."""
    panels = panel_history(outputs)
    fig, ax = plt.subplots(figsize=(8, 4.5))
    if panels:
        labels = sorted({label for p in panels for label in p.labels})
        xs = range(len(panels))
        for label in labels:
            ys = [
                dict(zip(p.labels, p.probabilities)).get(label, float("nan"))
                for p in panels
            ]
            ax.plot(xs, ys, marker="o", label=label)
        ax.legend()
    ax.set_xlabel("panel update")
    ax.set_ylabel("probability")
    ax.set_ylim(-0.05, 1.05)
    ax.set_title("Probability panel over the transcript")
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def write_replay_report(outputs: list[OutputEvent], directory: str | Path) -> list[Path]:
    """CSV of panel updates plus a rendered figure, side by side."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    csv_path = directory / "panel_updates.csv"
    fig_path = directory / "panel_updates.png"
    write_panel_csv(outputs, csv_path)
    render_panel_figure(outputs, fig_path)
    return [csv_path, fig_path]
