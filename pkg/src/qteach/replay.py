"""Headless, deterministic execution of scripted event transcripts.

A script file is JSON: ``{"lesson": "...", "events": [<input event>, ...]}``
where each event uses the wire payload shape (see docs/wire-protocol.md);
ticks appear inline as ``{"type": "tick", "dt": ...}``. The output
transcript is one canonical JSON line per emitted output event, so byte
comparison of two runs is meaningful.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from . import lessons
from .lessons import LessonConfig, LessonId, OutputEvent


class ScriptError(ValueError):
    """Raised when a script file cannot be parsed."""


@dataclass(frozen=True)
class Script:
    lesson: LessonId
    events: tuple[lessons.InputEvent, ...]


def parse_script(text: str) -> Script:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ScriptError(f"script is not valid JSON: {exc}") from exc
    if not isinstance(data, dict) or "lesson" not in data or "events" not in data:
        raise ScriptError("script must be an object with 'lesson' and 'events'")
    try:
        lesson = LessonId(data["lesson"])
    except ValueError as exc:
        raise ScriptError(f"unknown lesson: {data['lesson']!r}") from exc
    try:
        events = tuple(lessons.input_from_dict(e) for e in data["events"])
    except ValueError as exc:
        raise ScriptError(str(exc)) from exc
    return Script(lesson=lesson, events=events)


def load_script(path: str | Path) -> Script:
    return parse_script(Path(path).read_text(encoding="utf-8"))


def transcript_line(seq: int, ev: OutputEvent) -> str:
    payload = lessons.output_to_dict(ev)
    return json.dumps({"seq": seq, "event": payload}, sort_keys=True, ensure_ascii=False)


def run_script(
    script: Script,
    seed: int,
    config: LessonConfig = lessons.DEFAULT_CONFIG,
) -> list[OutputEvent]:
    """Feed every scripted event through the lesson engine in order."""
    session = lessons.start_lesson(script.lesson, seed)
    outputs: list[OutputEvent] = []
    for ev in script.events:
        session, out = lessons.handle_event(session, ev, config)
        outputs.extend(out)
    return outputs


def run_transcript(
    path: str | Path,
    seed: int,
    config: LessonConfig = lessons.DEFAULT_CONFIG,
) -> list[str]:
    """Run a script file and return the canonical transcript lines."""
    outputs = run_script(load_script(path), seed, config)
    return [transcript_line(i, ev) for i, ev in enumerate(outputs)]
