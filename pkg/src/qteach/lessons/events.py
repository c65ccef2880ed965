"""Input and output event vocabulary plus its JSON wire form.

The dict form produced by ``to_dict`` is the normative payload shape used
by the wire protocol, lesson transcripts, and the replay CLI.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class LessonId(str, Enum):
    SUPERPOSITION = "superposition"
    MEASUREMENT = "measurement"
    DECOHERENCE = "decoherence"
    TUNNELING = "tunneling"
    TELEPORTATION = "teleportation"
    ENTANGLEMENT = "entanglement"
    GATE_IDENTITY = "gate_identity"
    GATE_PAULI_X = "gate_pauli_x"
    GATE_HADAMARD = "gate_hadamard"


class GestureKind(str, Enum):
    FIST = "fist"
    THUMBS_UP = "thumbs_up"


class ObjectKind(str, Enum):
    COIN = "coin"
    PAPER_CUTTER = "paper_cutter"
    CUBE_I = "cube_i"
    CUBE_X = "cube_x"
    CUBE_H = "cube_h"


class Face(str, Enum):
    HEAD = "head"
    TAIL = "tail"


class AnimationKind(str, Enum):
    TUNNEL_THROUGH_BARRIER = "tunnel_through_barrier"
    TELEPORT_TRANSFER = "teleport_transfer"
    DECOHERENCE_SLOWDOWN = "decoherence_slowdown"
    ENVIRONMENT_INTERACTION = "environment_interaction"


# ---------------------------------------------------------------------------
# input events

@dataclass(frozen=True)
class Gesture:
    kind: GestureKind


@dataclass(frozen=True)
class ObjectDetected:
    kind: ObjectKind
    zone: str
    slider: float | None = None

    def __post_init__(self):
        if (self.kind == ObjectKind.PAPER_CUTTER) != (self.slider is not None):
            raise ValueError("slider must be present exactly for paper_cutter detections")


@dataclass(frozen=True)
class SliderMoved:
    s: float


@dataclass(frozen=True)
class MenuSelect:
    lesson: LessonId


@dataclass(frozen=True)
class Tick:
    dt: float


InputEvent = Gesture | ObjectDetected | SliderMoved | MenuSelect | Tick


# ---------------------------------------------------------------------------
# output events

@dataclass(frozen=True)
class StartRotation:
    object_id: str
    speed: float


@dataclass(frozen=True)
class StopRotation:
    object_id: str
    face: Face


@dataclass(frozen=True)
class PanelUpdate:
    labels: tuple[str, ...]
    probabilities: tuple[float, ...]

    def __post_init__(self):
        if len(self.labels) != len(self.probabilities):
            raise ValueError("labels and probabilities must have the same length")
        if any(p < 0.0 or p > 1.0 for p in self.probabilities):
            raise ValueError("probabilities must lie in [0, 1]")
        if abs(sum(self.probabilities) - 1.0) > 1e-9:
            raise ValueError("probabilities must sum to 1")


@dataclass(frozen=True)
class ShowMath:
    expression_id: str


@dataclass(frozen=True)
class Animate:
    kind: AnimationKind
    params: tuple[tuple[str, object], ...] = ()


@dataclass(frozen=True)
class Narration:
    text_id: str


@dataclass(frozen=True)
class ReturnToMenu:
    pass


@dataclass(frozen=True)
class VirtualCutterOutput:
    s_out: float


OutputEvent = (
    StartRotation
    | StopRotation
    | PanelUpdate
    | ShowMath
    | Animate
    | Narration
    | ReturnToMenu
    | VirtualCutterOutput
)


# ---------------------------------------------------------------------------
# dict (wire) form

def input_to_dict(ev: InputEvent) -> dict:
    if isinstance(ev, Gesture):
        return {"type": "gesture", "kind": ev.kind.value}
    if isinstance(ev, ObjectDetected):
        out = {"type": "object_detected", "kind": ev.kind.value, "zone": ev.zone}
        if ev.slider is not None:
            out["slider"] = ev.slider
        return out
    if isinstance(ev, SliderMoved):
        return {"type": "slider_moved", "s": ev.s}
    if isinstance(ev, MenuSelect):
        return {"type": "menu_select", "lesson": ev.lesson.value}
    if isinstance(ev, Tick):
        return {"type": "tick", "dt": ev.dt}
    raise TypeError(f"not an input event: {ev!r}")


def input_from_dict(data: dict) -> InputEvent:
    if not isinstance(data, dict) or "type" not in data:
        raise ValueError("input event must be an object with a 'type' field")
    kind = data["type"]
    try:
        if kind == "gesture":
            return Gesture(GestureKind(data["kind"]))
        if kind == "object_detected":
            return ObjectDetected(
                ObjectKind(data["kind"]), str(data["zone"]),
                None if data.get("slider") is None else float(data["slider"]),
            )
        if kind == "slider_moved":
            return SliderMoved(float(data["s"]))
        if kind == "menu_select":
            return MenuSelect(LessonId(data["lesson"]))
        if kind == "tick":
            return Tick(float(data["dt"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed {kind} event: {exc}") from exc
    raise ValueError(f"unknown input event type: {kind!r}")


def output_to_dict(ev: OutputEvent) -> dict:
    if isinstance(ev, StartRotation):
        return {"type": "start_rotation", "object_id": ev.object_id, "speed": ev.speed}
    if isinstance(ev, StopRotation):
        return {"type": "stop_rotation", "object_id": ev.object_id, "face": ev.face.value}
    if isinstance(ev, PanelUpdate):
        return {
            "type": "panel_update",
            "labels": list(ev.labels),
            "probabilities": list(ev.probabilities),
        }
    if isinstance(ev, ShowMath):
        return {"type": "show_math", "expression_id": ev.expression_id}
    if isinstance(ev, Animate):
        return {"type": "animate", "kind": ev.kind.value, "params": dict(ev.params)}
    if isinstance(ev, Narration):
        return {"type": "narration", "text_id": ev.text_id}
    if isinstance(ev, ReturnToMenu):
        return {"type": "return_to_menu"}
    if isinstance(ev, VirtualCutterOutput):
        return {"type": "virtual_cutter_output", "s_out": ev.s_out}
    raise TypeError(f"not an output event: {ev!r}")
