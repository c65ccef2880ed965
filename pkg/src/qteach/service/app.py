"""HTTP + WebSocket session host.

HTTP carries the control verbs (create/list/validate/quiz) and can also
post events directly; the WebSocket endpoint streams every output event of
a session, in seq order, to all of its subscribers.
"""
from __future__ import annotations

import asyncio

from fastapi import FastAPI, WebSocket, WebSocketDisconnect
from fastapi.responses import JSONResponse

from .. import analogy, lessons
from ..analogy import ConceptKind, QCConcept
from ..qcore import GateLabel
from .protocol import ProtocolError, WireMessage, parse_client_message
from .sessions import DEFAULT_IDLE_TIMEOUT, SessionManager
from .store import ResultStore


def _error_response(exc: ProtocolError, status: int = 400) -> JSONResponse:
    return JSONResponse(
        status_code=status,
        content={"type": "error", "payload": {"code": exc.code, "message": str(exc)}},
    )


def _concept_from_payload(payload: dict) -> QCConcept:
    try:
        kind = ConceptKind(payload["concept"])
    except (KeyError, ValueError):
        raise ProtocolError(
            "unknown_concept", f"unknown concept: {payload.get('concept')!r}"
        ) from None
    gate = payload.get("gate")
    if kind == ConceptKind.GATE:
        try:
            return QCConcept(kind, GateLabel(gate))
        except ValueError:
            raise ProtocolError("unknown_gate", f"unknown gate label: {gate!r}") from None
    if gate is not None:
        raise ProtocolError("unknown_concept", "gate label only applies to Gate concepts")
    return QCConcept(kind)


def create_app(
    store_dir: str | None = None,
    config: lessons.LessonConfig = lessons.DEFAULT_CONFIG,
    idle_timeout: float = DEFAULT_IDLE_TIMEOUT,
) -> FastAPI:
    app = FastAPI(title="qteach session service")
    store = ResultStore(store_dir) if store_dir else None
    manager = SessionManager(store=store, config=config, idle_timeout=idle_timeout)
    catalog = analogy.default_catalog()
    app.state.manager = manager
    app.state.store = store

    @app.exception_handler(ProtocolError)
    async def on_protocol_error(request, exc: ProtocolError):
        status = 404 if exc.code == "unknown_session" else 400
        return _error_response(exc, status)

    @app.get("/lessons")
    async def list_lessons():
        return {
            "type": "lesson_list",
            "payload": {"lessons": [lesson.value for lesson in lessons.all_lessons()]},
        }

    @app.post("/sessions")
    async def create_session(body: dict):
        seed = body.get("seed")
        if seed is not None and not isinstance(seed, int):
            raise ProtocolError("malformed_message", "'seed' must be an integer")
        session = manager.create_session(str(body.get("lesson", "")), seed)
        return {
            "type": "session_created",
            "session_id": session.session_id,
            "payload": {"lesson": session.lesson.value, "seed": session.seed},
        }

    async def _apply_event(session_id: str, event_data: dict) -> dict:
        messages = await manager.post_event(session_id, event_data)
        return {
            "type": "output_events",
            "session_id": session_id,
            "payload": {"events": [m.to_dict() for m in messages]},
        }

    @app.post("/sessions/{session_id}/events")
    async def post_event(session_id: str, body: dict):
        event = body.get("event")
        if not isinstance(event, dict):
            raise ProtocolError("malformed_message", "'event' must be an object")
        return await _apply_event(session_id, event)

    @app.post("/sessions/{session_id}/detections")
    async def detector_ingest(session_id: str, body: dict):
        detection = body.get("detection")
        if not isinstance(detection, dict):
            raise ProtocolError("malformed_message", "'detection' must be an object")
        if detection.get("type") != "object_detected":
            raise ProtocolError(
                "malformed_event", "detector ingest accepts only object_detected events"
            )
        return await _apply_event(session_id, detection)

    @app.post("/sessions/{session_id}/quiz")
    async def submit_quiz(session_id: str, body: dict):
        answers = body.get("answers")
        if not isinstance(answers, list):
            raise ProtocolError("invalid_answers", "'answers' must be a list of indices")
        result = manager.submit_quiz(session_id, answers)
        return {
            "type": "quiz_result",
            "session_id": session_id,
            "payload": {
                "score": result.score,
                "total": result.total,
                "per_item": [{"id": i, "correct": ok} for i, ok in result.per_item],
            },
        }

    @app.post("/analogy/validate")
    async def validate_analogy(body: dict):
        concept = _concept_from_payload(body)
        object_id = body.get("object_id")
        obj = next((o for o in catalog if o.id == object_id), None)
        if obj is None:
            raise ProtocolError("unknown_object", f"unknown object id: {object_id!r}")
        report = analogy.validate_analogy(concept, obj)
        return {
            "type": "validation_result",
            "payload": {
                "valid": report.valid,
                "per_dimension": [
                    {
                        "dimension": c.dimension,
                        "required": _jsonable(c.required),
                        "actual": _jsonable(c.actual),
                        "satisfied": c.satisfied,
                    }
                    for c in report.per_dimension
                ],
            },
        }

    @app.websocket("/sessions/{session_id}/stream")
    async def stream(websocket: WebSocket, session_id: str):
        await websocket.accept()
        try:
            queue = manager.subscribe(session_id)
        except ProtocolError as exc:
            await websocket.send_json(
                WireMessage("error", session_id, 0,
                            {"code": exc.code, "message": str(exc)}).to_dict()
            )
            await websocket.close()
            return

        async def writer():
            while True:
                msg: WireMessage = await queue.get()
                await websocket.send_json(msg.to_dict())

        writer_task = asyncio.create_task(writer())
        err_seq = 0
        try:
            while True:
                raw = await websocket.receive_text()
                try:
                    msg = parse_client_message(raw)
                    if msg.type != "input_event":
                        raise ProtocolError(
                            "unknown_type",
                            f"socket accepts only input_event, got {msg.type!r}",
                        )
                    await manager.post_event(session_id, msg.payload.get("event", {}))
                except ProtocolError as exc:
                    err_seq -= 1  # errors carry their own descending stream
                    await websocket.send_json(
                        WireMessage("error", session_id, err_seq,
                                    {"code": exc.code, "message": str(exc)}).to_dict()
                    )
        except WebSocketDisconnect:
            pass
        finally:
            writer_task.cancel()
            manager.unsubscribe(session_id, queue)

    return app


def _jsonable(value):
    return getattr(value, "value", value)
