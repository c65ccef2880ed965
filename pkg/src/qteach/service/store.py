"""Append-only session record store: one JSONL file per day.

Line kinds: ``created`` (session metadata), ``message`` (one transcript
entry), ``quiz`` (submitted score). Records are reconstructed by replaying
every line in append order.
"""
from __future__ import annotations

import datetime as dt
import json
import threading
from dataclasses import dataclass, field
from pathlib import Path


@dataclass
class SessionRecord:
    session_id: str
    lesson: str
    seed: int
    created_at: str
    transcript: list[tuple[str, dict]] = field(default_factory=list)
    quiz_score: int | None = None


class ResultStore:
    """Single-writer append-only store under one directory."""

    def __init__(self, directory: str | Path):
        self.directory = Path(directory)
        self.directory.mkdir(parents=True, exist_ok=True)
        self._lock = threading.Lock()

    def _current_file(self) -> Path:
        day = dt.datetime.now(dt.timezone.utc).strftime("%Y%m%d")
        return self.directory / f"sessions-{day}.jsonl"

    def _append(self, line: dict) -> None:
        encoded = json.dumps(line, sort_keys=True, ensure_ascii=False)
        with self._lock:
            with self._current_file().open("a", encoding="utf-8") as fh:
                fh.write(encoded + "\n")
                fh.flush()

    def record_created(self, session_id: str, lesson: str, seed: int, created_at: str) -> None:
        self._append({
            "kind": "created",
            "session_id": session_id,
            "lesson": lesson,
            "seed": seed,
            "created_at": created_at,
        })

    def record_message(self, session_id: str, direction: str, message: dict) -> None:
        self._append({
            "kind": "message",
            "session_id": session_id,
            "direction": direction,
            "message": message,
        })

    def record_quiz(self, session_id: str, score: int) -> None:
        self._append({"kind": "quiz", "session_id": session_id, "score": score})

    def load_records(self) -> dict[str, SessionRecord]:
        records: dict[str, SessionRecord] = {}
        for path in sorted(self.directory.glob("sessions-*.jsonl")):
            with path.open(encoding="utf-8") as fh:
                for raw in fh:
                    raw = raw.strip()
                    if not raw:
                        continue
                    line = json.loads(raw)
                    kind = line["kind"]
                    if kind == "created":
                        records[line["session_id"]] = SessionRecord(
                            session_id=line["session_id"],
                            lesson=line["lesson"],
                            seed=line["seed"],
                            created_at=line["created_at"],
                        )
                    elif kind == "message":
                        records[line["session_id"]].transcript.append(
                            (line["direction"], line["message"])
                        )
                    elif kind == "quiz":
                        records[line["session_id"]].quiz_score = line["score"]
                    else:
                        raise ValueError(f"unknown store line kind: {kind!r}")
        return records
