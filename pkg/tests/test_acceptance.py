"""Acceptance criteria, one test per criterion, with a pass/fail line each."""
import json
import math
import time
from importlib import resources
from itertools import permutations
from pathlib import Path

import numpy as np
import pytest
from fastapi.testclient import TestClient

from qteach import lessons, qcore, replay
from qteach.analogy import (
    ConceptKind,
    ConceptType,
    Continuity,
    Duality,
    ProbabilityQuant,
    QCConcept,
    characterize,
    required_properties,
)
from qteach.lessons import (
    Face,
    Gesture,
    GestureKind,
    LessonConfig,
    LessonId,
    ObjectDetected,
    ObjectKind,
    PanelUpdate,
    StopRotation,
)
from qteach.qcore import GateLabel, RandomSource, StateVector
from qteach.service import create_app
from tests.test_qcore import embed_oracle, random_state

ATOL = 1e-9
FIST = Gesture(GestureKind.FIST)


def report(name: str, ok: bool, detail: str = ""):
    status = "PASS" if ok else "FAIL"
    print(f"[{status}] {name}" + (f" ({detail})" if detail else ""))
    assert ok, f"{name}: {detail}"


def gate_lesson_panel(lesson: LessonId, cube: ObjectKind, s: float) -> PanelUpdate:
    session = lessons.start_lesson(lesson, 0)
    session, _ = lessons.handle_event(session, ObjectDetected(cube, "gate-zone"))
    _, outputs = lessons.handle_event(
        session, ObjectDetected(ObjectKind.PAPER_CUTTER, "cutter-zone", slider=s)
    )
    return next(ev for ev in outputs if isinstance(ev, PanelUpdate))


def test_gate_truth_table():
    start = time.perf_counter()
    cases = [
        (LessonId.GATE_IDENTITY, ObjectKind.CUBE_I, (0.0, 1.0)),
        (LessonId.GATE_PAULI_X, ObjectKind.CUBE_X, (1.0, 0.0)),
        (LessonId.GATE_HADAMARD, ObjectKind.CUBE_H, (0.5, 0.5)),
    ]
    worst = 0.0
    for lesson, cube, expected in cases:
        panel = gate_lesson_panel(lesson, cube, 0.0)
        worst = max(worst, max(abs(a - b) for a, b in zip(panel.probabilities, expected)))
    elapsed = time.perf_counter() - start
    report(
        "gate truth table at s=0 (Identity/PauliX/Hadamard)",
        worst < ATOL and elapsed < 1.0,
        f"max dev {worst:.2e}, {elapsed:.3f}s",
    )


def test_superposition_panel():
    session = lessons.start_lesson(LessonId.SUPERPOSITION, 0)
    session, _ = lessons.handle_event(
        session, ObjectDetected(ObjectKind.COIN, "magic-circle")
    )
    _, outputs = lessons.handle_event(session, FIST)
    panel = next(ev for ev in outputs if isinstance(ev, PanelUpdate))
    dev = max(abs(p - 0.5) for p in panel.probabilities)
    report("superposition panel is (0.5, 0.5)", dev < ATOL, f"max dev {dev:.2e}")


def test_entanglement_anticorrelation():
    start = time.perf_counter()
    left = ObjectDetected(ObjectKind.COIN, "left-circle")
    right = ObjectDetected(ObjectKind.COIN, "right-circle")
    tails_left = 0
    for seed in range(10_000):
        session = lessons.start_lesson(LessonId.ENTANGLEMENT, seed)
        outputs = []
        for ev in (left, right, FIST):
            session, out = lessons.handle_event(session, ev)
            outputs.extend(out)
        stops = [ev for ev in outputs if isinstance(ev, StopRotation)]
        assert len(stops) == 2 and stops[0].face != stops[1].face, f"seed {seed}"
        tails_left += stops[0].face == Face.TAIL
    freq = tails_left / 10_000
    elapsed = time.perf_counter() - start
    report(
        "entanglement anti-correlation over 10,000 seeds",
        0.48 <= freq <= 0.52 and elapsed < 10.0,
        f"left-tail freq {freq:.4f}, {elapsed:.2f}s",
    )


def test_measurement_statistics():
    half = 1 / math.sqrt(2)
    state = StateVector([half, half])
    rng = RandomSource(424242)
    hits = sum(qcore.measure_all(state, rng).outcome == 0 for _ in range(10_000))
    freq = hits / 10_000
    report(
        "Born statistics: 10,000 measure_all draws on (1/sqrt2, 1/sqrt2)",
        0.48 <= freq <= 0.52,
        f"outcome-0 freq {freq:.4f}",
    )


def test_framework_golden_table():
    golden = {
        QCConcept(ConceptKind.SUPERPOSITION): (1, Duality.DUAL, ConceptType.STATE, ProbabilityQuant.NON_PROBABILISTIC, 1, True, False, Continuity.DISCRETE),
        QCConcept(ConceptKind.MEASUREMENT): (1, Duality.NON_DUAL, ConceptType.OPERATOR, ProbabilityQuant.NON_PROBABILISTIC, 1, False, True, Continuity.DISCRETE),
        QCConcept(ConceptKind.DECOHERENCE): (1, Duality.NON_DUAL, ConceptType.PROCESS, ProbabilityQuant.NON_PROBABILISTIC, 1, False, True, Continuity.DISCRETE),
        QCConcept(ConceptKind.TUNNELING): (1, Duality.DUAL, ConceptType.PROCESS, ProbabilityQuant.NON_PROBABILISTIC, 1, True, True, Continuity.DISCRETE),
        QCConcept(ConceptKind.TELEPORTATION): (2, Duality.DUAL, ConceptType.PROCESS, ProbabilityQuant.NON_PROBABILISTIC, 2, True, True, Continuity.DISCRETE),
        QCConcept(ConceptKind.ENTANGLEMENT): (2, Duality.DUAL, ConceptType.PROCESS, ProbabilityQuant.NON_PROBABILISTIC, 2, True, True, Continuity.DISCRETE),
        QCConcept(ConceptKind.GATE, GateLabel.PAULI_X): (1, Duality.DUAL, ConceptType.OPERATOR, ProbabilityQuant.PROBABILISTIC, 1, True, True, Continuity.CONTINUOUS),
        QCConcept(ConceptKind.GATE, GateLabel.CNOT): (2, Duality.DUAL, ConceptType.OPERATOR, ProbabilityQuant.PROBABILISTIC, 2, True, True, Continuity.CONTINUOUS),
        QCConcept(ConceptKind.GATE, GateLabel.CSWAP): (3, Duality.DUAL, ConceptType.OPERATOR, ProbabilityQuant.PROBABILISTIC, 3, True, True, Continuity.CONTINUOUS),
    }
    ok = True
    for concept, row in golden.items():
        c = characterize(concept)
        p = required_properties(c)
        got = (c.num_qubits, c.duality, c.concept_type, c.probability,
               p.num_objects, p.rotation, p.translation, p.continuity)
        ok = ok and got == row
    report("framework golden table (7 concepts, gates at arities 1-3)", ok)


def test_oracle_equivalence():
    rng = np.random.default_rng(20260824)
    worst = 0.0
    checked = 0
    cases = []
    for n in (1, 2, 3):
        for label in GateLabel:
            gate = qcore.standard_gate(label)
            if gate.arity > n:
                continue
            for targets in permutations(range(n), gate.arity):
                cases.append((n, gate, list(targets), embed_oracle(gate.matrix, list(targets), n)))
    while checked < 1000:
        for n, gate, targets, full in cases:
            state = random_state(rng, n)
            expected = full @ state.amplitudes
            out = qcore.apply_gate(state, gate, targets)
            worst = max(worst, float(np.max(np.abs(out.amplitudes - expected))))
            checked += 1
    report(
        f"oracle equivalence over {checked} random states, all gates/targets",
        worst < ATOL,
        f"max amplitude dev {worst:.2e}",
    )


def test_involution_and_normalization_suite():
    rng = np.random.default_rng(77)
    worst_inv = 0.0
    worst_norm = 0.0
    for _ in range(1000):
        n = int(rng.integers(1, 4))
        state = random_state(rng, n)
        for label in (GateLabel.PAULI_X, GateLabel.HADAMARD):
            gate = qcore.standard_gate(label)
            q = int(rng.integers(0, n))
            once = qcore.apply_gate(state, gate, [q])
            twice = qcore.apply_gate(once, gate, [q])
            worst_inv = max(worst_inv, float(np.max(np.abs(twice.amplitudes - state.amplitudes))))
            worst_norm = max(worst_norm, abs(sum(qcore.probabilities(once)) - 1.0))
    report(
        "involution (X.X=I, H.H=I) and norm preservation over 1000 random cases",
        worst_inv < ATOL and worst_norm < ATOL,
        f"max involution dev {worst_inv:.2e}, max norm dev {worst_norm:.2e}",
    )


def test_deterministic_replay(tmp_path):
    script_path = Path(str(
        resources.files("qteach.data.scripts").joinpath("superposition_measurement.json")
    ))
    first = replay.run_transcript(script_path, seed=7)
    second = replay.run_transcript(script_path, seed=7)
    byte_identical = "\n".join(first).encode() == "\n".join(second).encode()

    script = replay.load_script(script_path)
    app = create_app(store_dir=str(tmp_path / "store"))
    with TestClient(app) as client:
        sid = client.post(
            "/sessions", json={"lesson": script.lesson.value, "seed": 7}
        ).json()["session_id"]
        via_service = []
        for ev in script.events:
            resp = client.post(
                f"/sessions/{sid}/events",
                json={"event": lessons.input_to_dict(ev)},
            )
            via_service.extend(m["payload"] for m in resp.json()["payload"]["events"])
    headless = [json.loads(line)["event"] for line in first]
    report(
        "deterministic replay: headless twice + live service, seed 7",
        byte_identical and via_service == headless,
    )


def test_decoherence_halt_time():
    config = LessonConfig(omega0=10.0, tau=3.0, omega_stop=0.5)
    expected = config.tau * math.log(config.omega0 / config.omega_stop)  # 8.987 s
    dt = 0.05
    session = lessons.start_lesson(LessonId.DECOHERENCE, 13)
    session, _ = lessons.handle_event(
        session, ObjectDetected(ObjectKind.COIN, "magic-circle"), config
    )
    session, _ = lessons.handle_event(session, FIST, config)
    halted_at = None
    final_panel = None
    for _ in range(400):
        session, outputs = lessons.tick(session, dt, config)
        stops = [ev for ev in outputs if isinstance(ev, StopRotation)]
        if stops:
            halted_at = session.elapsed
            final_panel = next(ev for ev in outputs if isinstance(ev, PanelUpdate))
            break
    pure_basis = final_panel is not None and sorted(final_panel.probabilities) == [0.0, 1.0]
    report(
        "decoherence halts at tau*ln(omega0/omega_stop) within one tick",
        halted_at is not None and abs(halted_at - expected) <= dt + 1e-9 and pure_basis,
        f"halt {halted_at}s vs expected {expected:.3f}s",
    )
