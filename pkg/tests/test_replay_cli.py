import json
from importlib import resources
from pathlib import Path

import pytest
from click.testing import CliRunner
from fastapi.testclient import TestClient

from qteach import qcore, replay
from qteach.cli import main
from qteach.service import create_app

SCRIPTS = resources.files("qteach.data.scripts")


def shipped_script(name) -> Path:
    return Path(str(SCRIPTS.joinpath(name)))


# ---------------------------------------------------------------------------
# replay library

def test_run_transcript_deterministic():
    path = shipped_script("superposition_measurement.json")
    first = replay.run_transcript(path, seed=7)
    second = replay.run_transcript(path, seed=7)
    assert first == second
    assert first  # not empty


def test_run_transcript_seed_changes_nothing_before_measurement():
    path = shipped_script("superposition_measurement.json")
    a = replay.run_transcript(path, seed=1)
    b = replay.run_transcript(path, seed=2)
    # prefix up to the measurement output is seed-independent
    assert a[0] == b[0]


def test_hadamard_sweep_panels():
    path = shipped_script("hadamard_sweep.json")
    lines = [json.loads(line) for line in replay.run_transcript(path, seed=0)]
    panels = [l["event"] for l in lines if l["event"]["type"] == "panel_update"]
    assert len(panels) == 11
    gate = qcore.standard_gate("Hadamard")
    for i, panel in enumerate(panels):
        s = round(i * 0.1, 1)
        expected = qcore.probabilities(
            qcore.apply_gate(qcore.state_from_slider(s), gate, [0])
        )
        assert panel["probabilities"] == pytest.approx(expected, abs=1e-9)
        assert sum(panel["probabilities"]) == pytest.approx(1.0, abs=1e-9)


def test_malformed_script_raises(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(replay.ScriptError):
        replay.load_script(bad)
    bad.write_text('{"lesson": "x", "events": []}')
    with pytest.raises(replay.ScriptError):
        replay.load_script(bad)
    bad.write_text('{"lesson": "superposition", "events": [{"type": "warp"}]}')
    with pytest.raises(replay.ScriptError):
        replay.load_script(bad)


# ---------------------------------------------------------------------------
# replay CLI

def test_cli_replay_byte_identical(tmp_path):
    runner = CliRunner()
    script = str(shipped_script("superposition_measurement.json"))
    results = [
        runner.invoke(main, ["replay", "--script", script, "--seed", "7"])
        for _ in range(2)
    ]
    assert all(r.exit_code == 0 for r in results)
    assert results[0].stdout_bytes == results[1].stdout_bytes


def test_cli_replay_out_file(tmp_path):
    runner = CliRunner()
    script = str(shipped_script("superposition_measurement.json"))
    out = tmp_path / "transcript.jsonl"
    result = runner.invoke(
        main, ["replay", "--script", script, "--seed", "7", "--out", str(out)]
    )
    assert result.exit_code == 0
    assert out.read_text() == result.output


def test_cli_replay_malformed_script(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("nope")
    runner = CliRunner()
    result = runner.invoke(main, ["replay", "--script", str(bad), "--seed", "1"])
    assert result.exit_code != 0


def test_cli_replay_report_dir(tmp_path):
    runner = CliRunner()
    script = str(shipped_script("hadamard_sweep.json"))
    report_dir = tmp_path / "report"
    result = runner.invoke(
        main,
        ["replay", "--script", script, "--seed", "0", "--report-dir", str(report_dir)],
    )
    assert result.exit_code == 0
    csv_text = (report_dir / "panel_updates.csv").read_text()
    assert csv_text.splitlines()[0] == "update,label,probability"
    assert len(csv_text.splitlines()) == 1 + 11 * 2
    assert (report_dir / "panel_updates.png").stat().st_size > 0


# ---------------------------------------------------------------------------
# framework / analogy / quiz CLI

def test_cli_framework_table(tmp_path):
    runner = CliRunner()
    fig = tmp_path / "table.png"
    csv_path = tmp_path / "table.csv"
    result = runner.invoke(
        main, ["framework", "table", "--figure", str(fig), "--csv", str(csv_path)]
    )
    assert result.exit_code == 0
    assert "Superposition" in result.output
    assert "CSwap" in result.output
    assert fig.stat().st_size > 0
    rows = csv_path.read_text().splitlines()
    assert len(rows) == 10  # header + 9 concept rows


def test_cli_analogy_validate_valid():
    runner = CliRunner()
    result = runner.invoke(
        main, ["analogy", "validate", "--concept", "Superposition", "--object", "coin"]
    )
    assert result.exit_code == 0
    assert json.loads(result.output)["valid"] is True


def test_cli_analogy_validate_invalid_exit_code():
    runner = CliRunner()
    result = runner.invoke(
        main,
        ["analogy", "validate", "--concept", "Gate", "--gate", "PauliX",
         "--object", "coin"],
    )
    assert result.exit_code == 2
    assert json.loads(result.output)["valid"] is False


def test_cli_analogy_suggest():
    runner = CliRunner()
    result = runner.invoke(
        main, ["analogy", "suggest", "--concept", "Gate", "--gate", "PauliX"]
    )
    assert result.exit_code == 0
    assert "paper-cutter" in result.output
    assert "ruler-coin" in result.output


def test_cli_quiz_grade():
    from qteach.lessons import load_quiz

    answers = ",".join(str(i.answer_index) for i in load_quiz())
    runner = CliRunner()
    result = runner.invoke(main, ["quiz", "grade", "--answers", answers])
    assert result.exit_code == 0
    assert "score\t9/9" in result.output


def test_cli_quiz_grade_bad_input():
    runner = CliRunner()
    result = runner.invoke(main, ["quiz", "grade", "--answers", "1,2"])
    assert result.exit_code != 0


# ---------------------------------------------------------------------------
# transparency: headless replay equals service-mediated outputs

def test_replay_matches_service(tmp_path):
    script_path = shipped_script("superposition_measurement.json")
    headless = [json.loads(l)["event"] for l in replay.run_transcript(script_path, seed=7)]

    script = replay.load_script(script_path)
    app = create_app(store_dir=str(tmp_path / "store"))
    with TestClient(app) as client:
        sid = client.post(
            "/sessions", json={"lesson": script.lesson.value, "seed": 7}
        ).json()["session_id"]
        via_service = []
        for ev in script.events:
            from qteach.lessons import input_to_dict

            resp = client.post(
                f"/sessions/{sid}/events", json={"event": input_to_dict(ev)}
            )
            via_service.extend(m["payload"] for m in resp.json()["payload"]["events"])
    assert via_service == headless
