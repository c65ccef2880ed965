"""Quantum-computing lessons built on daily-object analogies.

Subpackages:

- ``qcore``    -- 1-3 qubit state-vector simulation
- ``analogy``  -- concept characterization and object-analogy matching
- ``lessons``  -- event-driven lesson engine, scripts, and quiz
- ``service``  -- HTTP/WebSocket session host and persistence
- ``replay``   -- headless deterministic transcript runner
"""

__version__ = "0.1.0"
