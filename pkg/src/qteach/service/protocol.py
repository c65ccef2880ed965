"""Wire message envelope shared by the socket and HTTP surfaces.

The normative schema lives in docs/wire-protocol.md; keep both in sync.
"""
from __future__ import annotations

import json
from dataclasses import dataclass

PROTOCOL_VERSION = 1

CLIENT_TYPES = {
    "create_session",
    "input_event",
    "list_lessons",
    "validate_analogy",
    "submit_quiz",
}
SERVER_TYPES = {
    "session_created",
    "output_event",
    "lesson_list",
    "validation_result",
    "quiz_result",
    "error",
}


@dataclass(frozen=True)
class WireMessage:
    type: str
    session_id: str
    seq: int
    payload: dict

    def to_dict(self) -> dict:
        return {
            "v": PROTOCOL_VERSION,
            "type": self.type,
            "session_id": self.session_id,
            "seq": self.seq,
            "payload": self.payload,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, ensure_ascii=False)


class ProtocolError(ValueError):
    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code


def parse_client_message(raw: str | bytes) -> WireMessage:
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ProtocolError("malformed_json", f"message is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise ProtocolError("malformed_message", "message must be a JSON object")
    msg_type = data.get("type")
    if not isinstance(msg_type, str):
        raise ProtocolError("malformed_message", "missing 'type' field")
    if msg_type not in CLIENT_TYPES:
        raise ProtocolError("unknown_type", f"unknown message type: {msg_type!r}")
    payload = data.get("payload", {})
    if not isinstance(payload, dict):
        raise ProtocolError("malformed_message", "'payload' must be an object")
    seq = data.get("seq", 0)
    if not isinstance(seq, int):
        raise ProtocolError("malformed_message", "'seq' must be an integer")
    return WireMessage(
        type=msg_type,
        session_id=str(data.get("session_id", "")),
        seq=seq,
        payload=payload,
    )
