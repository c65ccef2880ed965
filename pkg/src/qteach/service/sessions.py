"""Live session registry: one serialized lesson session per id.

Each session owns an asyncio lock so its events apply in a total order
even when they arrive from several connections; distinct sessions are
fully independent. Idle sessions are reaped lazily on access.
"""
from __future__ import annotations

import asyncio
import datetime as dt
import secrets
import time
import uuid
from dataclasses import dataclass, field

from .. import lessons
from ..lessons import InputEvent, LessonConfig, LessonId, OutputEvent
from .protocol import ProtocolError, WireMessage
from .store import ResultStore

DEFAULT_IDLE_TIMEOUT = 30 * 60.0  # seconds


@dataclass
class LiveSession:
    session_id: str
    lesson: LessonId
    seed: int
    state: lessons.SessionState
    lock: asyncio.Lock = field(default_factory=asyncio.Lock)
    subscribers: list[asyncio.Queue] = field(default_factory=list)
    out_seq: int = 0
    in_seq: int = 0
    last_active: float = field(default_factory=time.monotonic)


class SessionManager:
    def __init__(
        self,
        store: ResultStore | None = None,
        config: LessonConfig = lessons.DEFAULT_CONFIG,
        idle_timeout: float = DEFAULT_IDLE_TIMEOUT,
    ):
        self.store = store
        self.config = config
        self.idle_timeout = idle_timeout
        self._sessions: dict[str, LiveSession] = {}

    # -- lifecycle ----------------------------------------------------------

    def _reap_idle(self) -> None:
        now = time.monotonic()
        expired = [
            sid for sid, s in self._sessions.items()
            if now - s.last_active > self.idle_timeout
        ]
        for sid in expired:
            del self._sessions[sid]

    def create_session(self, lesson: str, seed: int | None = None) -> LiveSession:
        self._reap_idle()
        try:
            lesson_id = LessonId(lesson)
        except ValueError:
            raise ProtocolError("unknown_lesson", f"unknown lesson: {lesson!r}") from None
        if seed is None:
            seed = secrets.randbits(63)
        seed = int(seed)
        session = LiveSession(
            session_id=uuid.uuid4().hex,
            lesson=lesson_id,
            seed=seed,
            state=lessons.start_lesson(lesson_id, seed),
        )
        self._sessions[session.session_id] = session
        if self.store is not None:
            self.store.record_created(
                session.session_id,
                lesson_id.value,
                seed,
                dt.datetime.now(dt.timezone.utc).isoformat(),
            )
        return session

    def get(self, session_id: str) -> LiveSession:
        self._reap_idle()
        session = self._sessions.get(session_id)
        if session is None:
            raise ProtocolError("unknown_session", f"unknown session: {session_id!r}")
        session.last_active = time.monotonic()
        return session

    # -- events -------------------------------------------------------------

    @staticmethod
    def validate_event(data: dict) -> InputEvent:
        try:
            ev = lessons.input_from_dict(data)
        except ValueError as exc:
            raise ProtocolError("malformed_event", str(exc)) from exc
        if isinstance(ev, lessons.SliderMoved) and not 0.0 <= ev.s <= 1.0:
            raise ProtocolError("invalid_slider", f"slider value out of range: {ev.s}")
        if (
            isinstance(ev, lessons.ObjectDetected)
            and ev.slider is not None
            and not 0.0 <= ev.slider <= 1.0
        ):
            raise ProtocolError("invalid_slider", f"slider value out of range: {ev.slider}")
        return ev

    async def post_event(self, session_id: str, event_data: dict) -> list[WireMessage]:
        """Apply one input event and fan the outputs out to subscribers."""
        session = self.get(session_id)
        ev = self.validate_event(event_data)
        async with session.lock:
            session.in_seq += 1
            if self.store is not None:
                self.store.record_message(
                    session_id, "in",
                    {"seq": session.in_seq, "event": lessons.input_to_dict(ev)},
                )
            session.state, outputs = lessons.handle_event(session.state, ev, self.config)
            messages = []
            for out in outputs:
                session.out_seq += 1
                msg = WireMessage(
                    type="output_event",
                    session_id=session_id,
                    seq=session.out_seq,
                    payload=lessons.output_to_dict(out),
                )
                messages.append(msg)
                if self.store is not None:
                    self.store.record_message(
                        session_id, "out", {"seq": msg.seq, "event": msg.payload}
                    )
            for queue in session.subscribers:
                for msg in messages:
                    queue.put_nowait(msg)
        return messages

    def subscribe(self, session_id: str) -> asyncio.Queue:
        session = self.get(session_id)
        queue: asyncio.Queue = asyncio.Queue()
        session.subscribers.append(queue)
        return queue

    def unsubscribe(self, session_id: str, queue: asyncio.Queue) -> None:
        session = self._sessions.get(session_id)
        if session is not None and queue in session.subscribers:
            session.subscribers.remove(queue)

    # -- quiz ---------------------------------------------------------------

    def submit_quiz(self, session_id: str, answers: list[int]) -> lessons.GradeResult:
        session = self.get(session_id)
        items = lessons.load_quiz()
        try:
            result = lessons.grade(items, [int(a) for a in answers])
        except (TypeError, ValueError) as exc:
            raise ProtocolError("invalid_answers", str(exc)) from exc
        if self.store is not None:
            self.store.record_quiz(session_id, result.score)
        return result
