"""Pure state-vector simulation for 1-3 qubits.

Conventions used throughout:

- qubit 0 is the most significant bit of the basis index, so for two qubits
  the amplitudes are ordered |00>, |01>, |10>, |11> and qubit 0 is the
  "left" object in a lesson scene.
- all states are pure and normalized; mixed states are out of scope.
- measurement randomness comes from a caller-owned :class:`RandomSource`;
  everything else is a pure function.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

ATOL = 1e-9

MAX_QUBITS = 3


class RandomSource:
    """Seedable, portable stream of uniform draws (Philox counter-based)."""

    def __init__(self, seed: int):
        seed = int(seed)
        if not 0 <= seed < 2**64:
            raise ValueError(f"seed must be a 64-bit unsigned integer, got {seed}")
        self.seed = seed
        self._gen = np.random.Generator(np.random.Philox(seed))

    def uniform(self) -> float:
        """Next draw in [0, 1)."""
        return float(self._gen.random())

    def clone(self) -> "RandomSource":
        """Copy with an identical stream position."""
        other = RandomSource(self.seed)
        other._gen.bit_generator.state = self._gen.bit_generator.state
        return other

    def __repr__(self) -> str:
        return f"RandomSource(seed={self.seed})"


@dataclass(frozen=True)
class StateVector:
    """Normalized complex amplitudes over the computational basis."""

    amplitudes: np.ndarray
    num_qubits: int = field(init=False)

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=np.complex128)
        amps = amps.reshape(-1)
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)
        n = int(round(math.log2(len(amps)))) if len(amps) else 0
        if len(amps) != 2**n or not 1 <= n <= MAX_QUBITS:
            raise ValueError(
                f"amplitude count must be 2^n for n in 1..{MAX_QUBITS}, got {len(amps)}"
            )
        object.__setattr__(self, "num_qubits", n)
        if not np.all(np.isfinite(amps.view(np.float64))):
            raise ValueError("amplitudes must be finite")
        norm = float(np.sum(np.abs(amps) ** 2))
        if abs(norm - 1.0) > ATOL:
            raise ValueError(f"state is not normalized: sum |a_i|^2 = {norm}")

    def __eq__(self, other) -> bool:
        return isinstance(other, StateVector) and np.array_equal(
            self.amplitudes, other.amplitudes
        )


class GateLabel(str, Enum):
    IDENTITY = "Identity"
    PAULI_X = "PauliX"
    HADAMARD = "Hadamard"
    CNOT = "CNOT"
    CSWAP = "CSwap"


@dataclass(frozen=True)
class GateMatrix:
    """Unitary matrix with its arity and label."""

    label: GateLabel
    matrix: np.ndarray

    def __post_init__(self):
        mat = np.asarray(self.matrix, dtype=np.complex128)
        mat.setflags(write=False)
        object.__setattr__(self, "matrix", mat)
        dim = mat.shape[0]
        if mat.shape != (dim, dim) or dim not in (2, 4, 8):
            raise ValueError(f"gate matrix must be 2^k x 2^k for k in 1..3, got {mat.shape}")
        dev = np.max(np.abs(mat.conj().T @ mat - np.eye(dim)))
        if dev > ATOL:
            raise ValueError(f"gate matrix is not unitary (max deviation {dev})")

    @property
    def arity(self) -> int:
        return int(round(math.log2(self.matrix.shape[0])))


_SQRT2_INV = 1.0 / math.sqrt(2.0)

_STANDARD_GATES = {
    GateLabel.IDENTITY: np.eye(2),
    GateLabel.PAULI_X: np.array([[0, 1], [1, 0]]),
    GateLabel.HADAMARD: np.array([[1, 1], [1, -1]]) * _SQRT2_INV,
    # control = first target
    GateLabel.CNOT: np.array(
        [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]]
    ),
    # control = first target, swap of the remaining two (Fredkin)
    GateLabel.CSWAP: np.eye(8)[[0, 1, 2, 3, 4, 6, 5, 7]],
}


def standard_gate(label: GateLabel | str) -> GateMatrix:
    """Look up the standard unitary for a gate label."""
    try:
        label = GateLabel(label)
    except ValueError:
        raise ValueError(f"unknown gate label: {label!r}") from None
    return GateMatrix(label, _STANDARD_GATES[label])


@dataclass(frozen=True)
class MeasurementResult:
    outcome: int
    prior_probabilities: tuple[float, ...]
    collapsed: StateVector


def state_from_slider(s: float) -> StateVector:
    """Single-qubit state with P(|0>) = s, real non-negative amplitudes."""
    s = float(s)
    if not 0.0 <= s <= 1.0:
        raise ValueError(f"slider position must lie in [0, 1], got {s}")
    return StateVector(np.array([math.sqrt(s), math.sqrt(1.0 - s)]))


def probabilities(state: StateVector) -> list[float]:
    """Born-rule probability of each basis outcome."""
    return [float(p) for p in np.abs(state.amplitudes) ** 2]


def basis_state(num_qubits: int, index: int) -> StateVector:
    amps = np.zeros(2**num_qubits)
    amps[index] = 1.0
    return StateVector(amps)


def apply_gate(state: StateVector, gate: GateMatrix, targets: list[int]) -> StateVector:
    """Apply ``gate`` to ``targets``, identity on the remaining qubits."""
    n = state.num_qubits
    k = gate.arity
    targets = list(targets)
    if len(targets) != k:
        raise ValueError(f"gate arity {k} does not match {len(targets)} targets")
    if len(set(targets)) != len(targets):
        raise ValueError(f"duplicate target qubits: {targets}")
    if any(not 0 <= t < n for t in targets):
        raise ValueError(f"target out of range for {n} qubits: {targets}")

    # qubit q is axis q of the reshaped tensor (MSB-first index convention)
    psi = state.amplitudes.reshape([2] * n)
    psi = np.moveaxis(psi, targets, range(k))
    psi = gate.matrix @ psi.reshape(2**k, -1)
    psi = np.moveaxis(psi.reshape([2] * n), range(k), targets)
    return StateVector(psi.reshape(-1))


def tensor_product(a: StateVector, b: StateVector) -> StateVector:
    """Kronecker product; ``a``'s qubits become the most significant ones."""
    if a.num_qubits + b.num_qubits > MAX_QUBITS:
        raise ValueError(
            f"combined register of {a.num_qubits + b.num_qubits} qubits exceeds {MAX_QUBITS}"
        )
    return StateVector(np.kron(a.amplitudes, b.amplitudes))


def bell_psi_plus() -> StateVector:
    """(|01> + |10>)/sqrt(2): anti-correlated measurement outcomes."""
    return StateVector(np.array([0.0, _SQRT2_INV, _SQRT2_INV, 0.0]))


def measure_all(state: StateVector, rng: RandomSource) -> MeasurementResult:
    """Measure every qubit; collapse to the sampled basis state."""
    probs = np.abs(state.amplitudes) ** 2
    cumulative = np.cumsum(probs)
    outcome = int(np.searchsorted(cumulative, rng.uniform(), side="right"))
    outcome = min(outcome, len(probs) - 1)
    return MeasurementResult(
        outcome=outcome,
        prior_probabilities=tuple(float(p) for p in probs),
        collapsed=basis_state(state.num_qubits, outcome),
    )


def measure_qubit(state: StateVector, qubit: int, rng: RandomSource) -> MeasurementResult:
    """Measure one qubit; the rest keep their conditional amplitudes."""
    n = state.num_qubits
    if not 0 <= qubit < n:
        raise ValueError(f"qubit index {qubit} out of range for {n} qubits")
    bits = (np.arange(2**n) >> (n - 1 - qubit)) & 1
    p1 = float(np.sum(np.abs(state.amplitudes[bits == 1]) ** 2))
    p0 = 1.0 - p1
    outcome = 0 if rng.uniform() < p0 else 1
    kept = np.where(bits == outcome, state.amplitudes, 0.0)
    norm = math.sqrt(p0 if outcome == 0 else p1)
    return MeasurementResult(
        outcome=outcome,
        prior_probabilities=(p0, p1),
        collapsed=StateVector(kept / norm),
    )
