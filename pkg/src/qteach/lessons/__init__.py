from .engine import (
    DEFAULT_CONFIG,
    LessonConfig,
    SessionState,
    all_lessons,
    handle_event,
    lesson_script,
    start_lesson,
    tick,
)
from .events import (
    Animate,
    AnimationKind,
    Face,
    Gesture,
    GestureKind,
    InputEvent,
    LessonId,
    MenuSelect,
    Narration,
    ObjectDetected,
    ObjectKind,
    OutputEvent,
    PanelUpdate,
    ReturnToMenu,
    ShowMath,
    SliderMoved,
    StartRotation,
    StopRotation,
    Tick,
    VirtualCutterOutput,
    input_from_dict,
    input_to_dict,
    output_to_dict,
)
from .quiz import GradeResult, QuizItem, grade, load_quiz

__all__ = [
    "DEFAULT_CONFIG",
    "LessonConfig",
    "SessionState",
    "all_lessons",
    "handle_event",
    "lesson_script",
    "start_lesson",
    "tick",
    "Animate",
    "AnimationKind",
    "Face",
    "Gesture",
    "GestureKind",
    "InputEvent",
    "LessonId",
    "MenuSelect",
    "Narration",
    "ObjectDetected",
    "ObjectKind",
    "OutputEvent",
    "PanelUpdate",
    "ReturnToMenu",
    "ShowMath",
    "SliderMoved",
    "StartRotation",
    "StopRotation",
    "Tick",
    "VirtualCutterOutput",
    "input_from_dict",
    "input_to_dict",
    "output_to_dict",
    "GradeResult",
    "QuizItem",
    "grade",
    "load_quiz",
]
