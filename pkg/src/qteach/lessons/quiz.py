"""Nine-question quiz set and grading."""
from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from .events import LessonId


@dataclass(frozen=True)
class QuizItem:
    id: str
    lesson: LessonId
    prompt: str
    choices: tuple[str, ...]
    answer_index: int

    def __post_init__(self):
        if not 0 <= self.answer_index < len(self.choices):
            raise ValueError(f"answer_index out of range for item {self.id!r}")


@dataclass(frozen=True)
class GradeResult:
    score: int
    total: int
    per_item: tuple[tuple[str, bool], ...]


def load_quiz() -> list[QuizItem]:
    """The shipped quiz: exactly one item per lesson."""
    text = resources.files("qteach.data").joinpath("quiz.json").read_text("utf-8")
    items = [
        QuizItem(
            id=e["id"],
            lesson=LessonId(e["lesson"]),
            prompt=e["prompt"],
            choices=tuple(e["choices"]),
            answer_index=int(e["answer_index"]),
        )
        for e in json.loads(text)
    ]
    return items


def grade(items: list[QuizItem], answers: list[int]) -> GradeResult:
    """Count matching answers; rejects malformed answer lists."""
    if len(answers) != len(items):
        raise ValueError(f"expected {len(items)} answers, got {len(answers)}")
    for item, answer in zip(items, answers):
        if not 0 <= int(answer) < len(item.choices):
            raise ValueError(f"answer {answer} out of range for item {item.id!r}")
    per_item = tuple(
        (item.id, int(answer) == item.answer_index)
        for item, answer in zip(items, answers)
    )
    return GradeResult(
        score=sum(ok for _, ok in per_item),
        total=len(items),
        per_item=per_item,
    )
