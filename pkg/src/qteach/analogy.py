"""Concept characterization and daily-object analogy matching.

A concept is characterized along four dimensions (qubit count, output
duality, concept type, probability quantification); each dimension maps to
one required property of a physical object (object count, rotation,
translation, property continuity). An object is a valid analogy when it
satisfies all four requirements.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from importlib import resources
from pathlib import Path

from .qcore import GateLabel


class ConceptKind(str, Enum):
    SUPERPOSITION = "Superposition"
    MEASUREMENT = "Measurement"
    DECOHERENCE = "Decoherence"
    TUNNELING = "Tunneling"
    TELEPORTATION = "Teleportation"
    ENTANGLEMENT = "Entanglement"
    GATE = "Gate"


class Duality(str, Enum):
    DUAL = "Dual"
    NON_DUAL = "NonDual"


class ConceptType(str, Enum):
    STATE = "State"
    PROCESS = "Process"
    OPERATOR = "Operator"


class ProbabilityQuant(str, Enum):
    PROBABILISTIC = "Probabilistic"
    NON_PROBABILISTIC = "NonProbabilistic"


class Continuity(str, Enum):
    CONTINUOUS = "Continuous"
    DISCRETE = "Discrete"


@dataclass(frozen=True)
class QCConcept:
    kind: ConceptKind
    gate_label: GateLabel | None = None

    def __post_init__(self):
        if (self.kind == ConceptKind.GATE) != (self.gate_label is not None):
            raise ValueError("gate_label must be present exactly when kind is Gate")


@dataclass(frozen=True)
class ConceptCharacterization:
    num_qubits: int
    duality: Duality
    concept_type: ConceptType
    probability: ProbabilityQuant


@dataclass(frozen=True)
class ObjectProperties:
    num_objects: int
    rotation: bool
    translation: bool
    continuity: Continuity

    def __post_init__(self):
        if self.num_objects < 1:
            raise ValueError("num_objects must be >= 1")


@dataclass(frozen=True)
class DailyObject:
    id: str
    name: str
    properties: ObjectProperties
    description: str = ""


@dataclass(frozen=True)
class DimensionCheck:
    dimension: str
    required: object
    actual: object
    satisfied: bool


@dataclass(frozen=True)
class ValidationReport:
    valid: bool
    per_dimension: tuple[DimensionCheck, ...]


GATE_ARITY = {
    GateLabel.IDENTITY: 1,
    GateLabel.PAULI_X: 1,
    GateLabel.HADAMARD: 1,
    GateLabel.CNOT: 2,
    GateLabel.CSWAP: 3,
}

# (qubits, duality, type, probability) per non-gate concept
_CONCEPT_TABLE = {
    ConceptKind.SUPERPOSITION: (1, Duality.DUAL, ConceptType.STATE, ProbabilityQuant.NON_PROBABILISTIC),
    ConceptKind.MEASUREMENT: (1, Duality.NON_DUAL, ConceptType.OPERATOR, ProbabilityQuant.NON_PROBABILISTIC),
    ConceptKind.DECOHERENCE: (1, Duality.NON_DUAL, ConceptType.PROCESS, ProbabilityQuant.NON_PROBABILISTIC),
    ConceptKind.TUNNELING: (1, Duality.DUAL, ConceptType.PROCESS, ProbabilityQuant.NON_PROBABILISTIC),
    ConceptKind.TELEPORTATION: (2, Duality.DUAL, ConceptType.PROCESS, ProbabilityQuant.NON_PROBABILISTIC),
    ConceptKind.ENTANGLEMENT: (2, Duality.DUAL, ConceptType.PROCESS, ProbabilityQuant.NON_PROBABILISTIC),
}


def characterize(concept: QCConcept) -> ConceptCharacterization:
    """Fixed characterization row for a concept; gate arity comes from its label."""
    if concept.kind == ConceptKind.GATE:
        return ConceptCharacterization(
            num_qubits=GATE_ARITY[concept.gate_label],
            duality=Duality.DUAL,
            concept_type=ConceptType.OPERATOR,
            probability=ProbabilityQuant.PROBABILISTIC,
        )
    return ConceptCharacterization(*_CONCEPT_TABLE[concept.kind])


def required_properties(c: ConceptCharacterization) -> ObjectProperties:
    """Object properties an analogy must provide for a characterization."""
    return ObjectProperties(
        num_objects=c.num_qubits,
        rotation=c.duality == Duality.DUAL,
        translation=c.concept_type != ConceptType.STATE,
        continuity=(
            Continuity.CONTINUOUS
            if c.probability == ProbabilityQuant.PROBABILISTIC
            else Continuity.DISCRETE
        ),
    )


def validate_analogy(concept: QCConcept, obj: DailyObject) -> ValidationReport:
    """Check a daily object against the concept's required properties.

    Capabilities are one-sided: an object that can rotate or translate also
    covers requirements that do not need it, a continuous property covers a
    discrete requirement, and the object count only needs to reach the
    required count.
    """
    req = required_properties(characterize(concept))
    got = obj.properties
    checks = (
        DimensionCheck(
            "num_objects", req.num_objects, got.num_objects,
            got.num_objects >= req.num_objects,
        ),
        DimensionCheck(
            "rotation", req.rotation, got.rotation,
            got.rotation or not req.rotation,
        ),
        DimensionCheck(
            "translation", req.translation, got.translation,
            got.translation or not req.translation,
        ),
        DimensionCheck(
            "continuity", req.continuity, got.continuity,
            got.continuity == Continuity.CONTINUOUS or req.continuity == Continuity.DISCRETE,
        ),
    )
    return ValidationReport(valid=all(c.satisfied for c in checks), per_dimension=checks)


def suggest_objects(concept: QCConcept, catalog: list[DailyObject]) -> list[DailyObject]:
    """Catalog entries that are valid analogies, in catalog order."""
    return [obj for obj in catalog if validate_analogy(concept, obj).valid]


class CatalogError(ValueError):
    """Raised when a catalog file is malformed."""


def _parse_object(entry: dict) -> DailyObject:
    required = {"id", "name", "num_objects", "rotation", "translation", "continuity"}
    missing = required - entry.keys()
    if missing:
        raise CatalogError(f"catalog entry missing fields: {sorted(missing)}")
    try:
        props = ObjectProperties(
            num_objects=int(entry["num_objects"]),
            rotation=bool(entry["rotation"]),
            translation=bool(entry["translation"]),
            continuity=Continuity(entry["continuity"]),
        )
    except ValueError as exc:
        raise CatalogError(f"invalid catalog entry {entry.get('id')!r}: {exc}") from exc
    return DailyObject(
        id=str(entry["id"]),
        name=str(entry["name"]),
        properties=props,
        description=str(entry.get("description", "")),
    )


def parse_catalog(text: str) -> list[DailyObject]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CatalogError(f"catalog is not valid JSON: {exc}") from exc
    if not isinstance(data, list):
        raise CatalogError("catalog must be a JSON array of objects")
    objects = [_parse_object(e) for e in data]
    seen: set[str] = set()
    for obj in objects:
        if obj.id in seen:
            raise CatalogError(f"duplicate object id: {obj.id!r}")
        seen.add(obj.id)
    return objects


def load_catalog(path: str | Path) -> list[DailyObject]:
    """Load and validate a catalog file."""
    return parse_catalog(Path(path).read_text(encoding="utf-8"))


def default_catalog() -> list[DailyObject]:
    """The catalog shipped with the package."""
    text = resources.files("qteach.data").joinpath("catalog.json").read_text("utf-8")
    return parse_catalog(text)
