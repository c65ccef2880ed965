from .app import create_app
from .protocol import PROTOCOL_VERSION, ProtocolError, WireMessage, parse_client_message
from .sessions import SessionManager
from .store import ResultStore, SessionRecord

__all__ = [
    "create_app",
    "PROTOCOL_VERSION",
    "ProtocolError",
    "WireMessage",
    "parse_client_message",
    "SessionManager",
    "ResultStore",
    "SessionRecord",
]
