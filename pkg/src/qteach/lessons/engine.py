"""Lesson state machines driven by declarative step scripts.

Each lesson ships as a JSON script (``qteach/data/lessons``) listing steps;
a step waits for one or more input events and runs named actions when they
have all arrived. The engine owns the action vocabulary; scripts only
sequence it, so lessons can be reauthored without code changes.

``handle_event`` and ``tick`` never mutate the session they are given:
they return a fresh session plus the emitted output events.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field, replace
from importlib import resources

from .. import qcore
from ..qcore import RandomSource, StateVector
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
    OutputEvent,
    PanelUpdate,
    ReturnToMenu,
    ShowMath,
    SliderMoved,
    StartRotation,
    StopRotation,
    Tick,
    VirtualCutterOutput,
)

TWO_PI = 2.0 * math.pi

QUBIT_LABELS = {
    1: ("|0⟩", "|1⟩"),
    2: ("|00⟩", "|01⟩", "|10⟩", "|11⟩"),
}


@dataclass(frozen=True)
class LessonConfig:
    """Tunable animation and decoherence parameters."""

    omega0: float = 10.0       # rad/s, initial rotation speed
    tau: float = 3.0           # s, decoherence decay constant
    omega_stop: float = 0.5    # rad/s, speed below which a coin halts
    tunnel_transmission: float = 1.0  # reserved; shipped lesson always passes


DEFAULT_CONFIG = LessonConfig()


@dataclass
class SessionState:
    lesson: LessonId
    seed: int
    rng: RandomSource
    step: int = 0
    register: StateVector | None = None
    animation: dict[str, dict[str, float]] = field(default_factory=dict)
    panel: PanelUpdate | None = None
    elapsed: float = 0.0
    satisfied: set[int] = field(default_factory=set)
    slider: float | None = None
    collapsed: bool = False
    decay: dict | None = None

    def clone(self) -> "SessionState":
        return replace(
            self,
            rng=self.rng.clone(),
            animation={k: dict(v) for k, v in self.animation.items()},
            satisfied=set(self.satisfied),
            decay=None if self.decay is None else dict(self.decay),
        )


@dataclass(frozen=True)
class Step:
    matchers: tuple[dict, ...]
    actions: tuple[dict, ...]
    then: int


@dataclass(frozen=True)
class LessonScript:
    lesson: LessonId
    steps: tuple[Step, ...]
    gate: str | None = None
    diagnostics: tuple[dict, ...] = ()


def _parse_script(data: dict) -> LessonScript:
    steps = tuple(
        Step(
            matchers=tuple(s.get("await", [])),
            actions=tuple(s.get("do", [])),
            then=int(s.get("then", i)),
        )
        for i, s in enumerate(data["steps"])
    )
    return LessonScript(
        lesson=LessonId(data["lesson"]),
        steps=steps,
        gate=data.get("gate"),
        diagnostics=tuple(data.get("diagnostics", [])),
    )


_SCRIPTS: dict[LessonId, LessonScript] = {}


def lesson_script(lesson: LessonId) -> LessonScript:
    if lesson not in _SCRIPTS:
        text = (
            resources.files("qteach.data.lessons")
            .joinpath(f"{lesson.value}.json")
            .read_text("utf-8")
        )
        _SCRIPTS[lesson] = _parse_script(json.loads(text))
    return _SCRIPTS[lesson]


def all_lessons() -> list[LessonId]:
    return list(LessonId)


def start_lesson(lesson: LessonId, seed: int) -> SessionState:
    """Fresh session at step 0 with a seeded random stream."""
    lesson = LessonId(lesson)
    lesson_script(lesson)  # fail fast on missing scripts
    return SessionState(lesson=lesson, seed=int(seed), rng=RandomSource(seed))


# ---------------------------------------------------------------------------
# event matching

def _matches(matcher: dict, ev: InputEvent) -> bool:
    kind = matcher.get("event")
    if isinstance(ev, Gesture):
        return kind == "gesture" and matcher.get("kind", ev.kind.value) == ev.kind.value
    if isinstance(ev, ObjectDetected):
        return (
            kind == "object_detected"
            and matcher.get("kind", ev.kind.value) == ev.kind.value
            and matcher.get("zone", ev.zone) == ev.zone
        )
    if isinstance(ev, SliderMoved):
        return kind == "slider_moved"
    return False


# ---------------------------------------------------------------------------
# actions

def _one_hot(n: int, index: int) -> tuple[float, ...]:
    return tuple(1.0 if i == index else 0.0 for i in range(n))


def _set_rotation(session: SessionState, obj: str, speed: float) -> None:
    entry = session.animation.setdefault(obj, {"angle": 0.0, "speed": 0.0})
    entry["speed"] = speed


def _panel(session: SessionState, labels, probs) -> PanelUpdate:
    update = PanelUpdate(tuple(labels), tuple(float(p) for p in probs))
    session.panel = update
    return update


def _act_prepare_superposition(session, params, config):
    obj = params["object"]
    session.register = qcore.state_from_slider(0.5)
    _set_rotation(session, obj, config.omega0)
    return [
        StartRotation(obj, config.omega0),
        _panel(session, QUBIT_LABELS[1], qcore.probabilities(session.register)),
    ]


def _act_start_rotation(session, params, config):
    obj = params["object"]
    _set_rotation(session, obj, config.omega0)
    return [StartRotation(obj, config.omega0)]


def _collapse_register(session, obj: str) -> list[OutputEvent]:
    result = qcore.measure_all(session.register, session.rng)
    session.register = result.collapsed
    session.collapsed = True
    _set_rotation(session, obj, 0.0)
    face = Face.HEAD if result.outcome == 0 else Face.TAIL
    return [
        StopRotation(obj, face),
        _panel(session, QUBIT_LABELS[1], _one_hot(2, result.outcome)),
    ]


def _act_measure_collapse(session, params, config):
    if session.collapsed or session.register is None:
        return []
    return _collapse_register(session, params["object"])


def _act_prepare_bell(session, params, config):
    left, right = params["left"], params["right"]
    session.register = qcore.bell_psi_plus()
    _set_rotation(session, left, config.omega0)
    _set_rotation(session, right, config.omega0)
    return [
        StartRotation(left, config.omega0),
        StartRotation(right, config.omega0),
        _panel(session, QUBIT_LABELS[2], qcore.probabilities(session.register)),
    ]


def _act_measure_entangled(session, params, config):
    if session.collapsed or session.register is None:
        return []
    left, right = params["left"], params["right"]
    result = qcore.measure_qubit(session.register, 0, session.rng)
    session.register = result.collapsed
    session.collapsed = True
    _set_rotation(session, left, 0.0)
    _set_rotation(session, right, 0.0)
    bit = result.outcome
    left_face = Face.HEAD if bit == 0 else Face.TAIL
    right_face = Face.TAIL if bit == 0 else Face.HEAD
    outputs = [
        StopRotation(left, left_face),
        StopRotation(right, right_face),
        PanelUpdate((f"{left} |0⟩", f"{left} |1⟩"), _one_hot(2, bit)),
        PanelUpdate((f"{right} |0⟩", f"{right} |1⟩"), _one_hot(2, 1 - bit)),
    ]
    session.panel = outputs[-1]
    return outputs


def _act_animate(session, params, config):
    kind = AnimationKind(params["kind"])
    extra = tuple(sorted(params.get("params", {}).items()))
    return [Animate(kind, extra)]


def _act_start_decay(session, params, config):
    session.decay = {"t": 0.0, "object": params["object"]}
    return []


def _act_teleport(session, params, config):
    source, dest = params["source"], params["dest"]
    src = session.animation.setdefault(source, {"angle": 0.0, "speed": 0.0})
    angle, speed = src["angle"], src["speed"]
    session.animation[dest] = {"angle": angle, "speed": speed}
    session.animation[source] = {"angle": 0.0, "speed": 0.0}
    return [
        Animate(
            AnimationKind.TELEPORT_TRANSFER,
            (("angle", angle), ("dest", dest), ("source", source)),
        ),
        StartRotation(dest, speed),
    ]


def _act_apply_slider_gate(session, params, config, *, script: LessonScript):
    if session.slider is None:
        return []
    gate = qcore.standard_gate(script.gate)
    state = qcore.state_from_slider(session.slider)
    session.register = qcore.apply_gate(state, gate, [0])
    probs = qcore.probabilities(session.register)
    return [
        _panel(session, QUBIT_LABELS[1], probs),
        VirtualCutterOutput(float(probs[0])),
        ShowMath(f"matrix_{script.gate.lower()}"),
    ]


def _act_narrate(session, params, config):
    return [Narration(params["text"])]


_ACTIONS = {
    "prepare_superposition": _act_prepare_superposition,
    "start_rotation": _act_start_rotation,
    "measure_collapse": _act_measure_collapse,
    "prepare_bell": _act_prepare_bell,
    "measure_entangled": _act_measure_entangled,
    "animate": _act_animate,
    "start_decay": _act_start_decay,
    "teleport": _act_teleport,
    "narrate": _act_narrate,
}


def _run_actions(session: SessionState, step: Step, script: LessonScript,
                 config: LessonConfig) -> list[OutputEvent]:
    outputs: list[OutputEvent] = []
    for action in step.actions:
        name = action["action"]
        if name == "apply_slider_gate":
            outputs.extend(_act_apply_slider_gate(session, action, config, script=script))
        else:
            outputs.extend(_ACTIONS[name](session, action, config))
    return outputs


# ---------------------------------------------------------------------------
# the two entry points

def handle_event(
    session: SessionState,
    ev: InputEvent,
    config: LessonConfig = DEFAULT_CONFIG,
) -> tuple[SessionState, list[OutputEvent]]:
    """Advance the lesson; unrecognized events leave the session untouched."""
    if isinstance(ev, Tick):
        return tick(session, ev.dt, config)
    if isinstance(ev, Gesture) and ev.kind == GestureKind.THUMBS_UP:
        return session, [ReturnToMenu()]
    if isinstance(ev, MenuSelect):
        return session, []
    if isinstance(ev, SliderMoved) and not 0.0 <= ev.s <= 1.0:
        return session, [Narration("invalid_slider")]
    if isinstance(ev, ObjectDetected) and ev.slider is not None and not 0.0 <= ev.slider <= 1.0:
        return session, [Narration("invalid_slider")]

    script = lesson_script(session.lesson)
    for diag in script.diagnostics:
        if _matches(diag["match"], ev):
            return session, [Narration(diag["narration"])]

    step = script.steps[session.step]
    hit = [i for i, m in enumerate(step.matchers) if _matches(m, ev)]
    if not hit:
        return session, []
    pending = [i for i in hit if i not in session.satisfied]
    if not pending:
        return session, []  # duplicate detection is idempotent
    index = pending[0]

    new = session.clone()
    new.satisfied.add(index)
    if isinstance(ev, ObjectDetected) and ev.slider is not None:
        new.slider = ev.slider
    if isinstance(ev, SliderMoved):
        new.slider = ev.s

    if len(new.satisfied) < len(step.matchers):
        return new, []

    outputs = _run_actions(new, step, script, config)
    new.step = step.then
    new.satisfied = set()
    return new, outputs


def tick(
    session: SessionState,
    dt: float,
    config: LessonConfig = DEFAULT_CONFIG,
) -> tuple[SessionState, list[OutputEvent]]:
    """Advance animations by ``dt`` seconds; drives the decoherence decay."""
    if dt < 0:
        raise ValueError(f"dt must be non-negative, got {dt}")
    if dt == 0:
        return session, []

    new = session.clone()
    new.elapsed += dt
    for entry in new.animation.values():
        entry["angle"] = (entry["angle"] + entry["speed"] * dt) % TWO_PI

    outputs: list[OutputEvent] = []
    if new.decay is not None and not new.collapsed:
        new.decay["t"] += dt
        speed = config.omega0 * math.exp(-new.decay["t"] / config.tau)
        obj = new.decay["object"]
        if speed < config.omega_stop:
            outputs = _collapse_register(new, obj)
            outputs.append(Narration("classical_bit"))
            new.decay = None
        else:
            _set_rotation(new, obj, speed)
    return new, outputs
