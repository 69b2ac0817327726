"""Problem instances, gap parameters, and their JSON file format.

Two instance kinds are supported: set cover over a ground set of elements,
and vertex cover on a k-uniform hypergraph.  Both are immutable after
construction and validated eagerly.  Decoding errors are split into two
classes: :class:`~gapcover.errors.MalformedInputError` for data that does
not match the file format (bad JSON, missing fields, wrong types, unsorted
lists) and :class:`~gapcover.errors.InvariantViolationError` for structurally
well-formed data that violates a semantic invariant (index out of range,
uncovered element, empty subset).
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InvariantViolationError, MalformedInputError
from .exact_linalg import IntMatrix

__all__ = [
    "SetCoverInstance",
    "HypergraphInstance",
    "GapParams",
    "Verdict",
    "build_set_cover_incidence",
    "build_hypergraph_incidence",
    "append_ones_column",
    "parse_instance",
    "parse_document",
    "serialize_instance",
    "instance_digest",
]


def _check_index_tuple(values: Sequence[int], upper: int, what: str, label: str) -> None:
    for v in values:
        if not isinstance(v, int) or isinstance(v, bool):
            raise InvariantViolationError(f"{what} {label}: index {v!r} is not an integer")
        if not 0 <= v < upper:
            raise InvariantViolationError(f"{what} {label}: index {v} outside [0, {upper})")
    for a, b in zip(values, values[1:]):
        if a >= b:
            raise InvariantViolationError(f"{what} {label}: indices must be sorted and distinct")


@dataclass(frozen=True)
class SetCoverInstance:
    """Ground set {0, ..., universe_size-1} plus an ordered family of subsets.

    Invariants: at least one element and one subset, every subset non-empty,
    sorted, with distinct in-range elements, and the union of the subsets is
    the whole ground set.  Duplicate subsets are permitted; the empty subset
    is not.
    """

    universe_size: int
    sets: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.universe_size < 1:
            raise InvariantViolationError("universe must contain at least one element")
        if not self.sets:
            raise InvariantViolationError("instance must contain at least one subset")
        covered: set[int] = set()
        for i, subset in enumerate(self.sets):
            if not subset:
                raise InvariantViolationError(f"subset {i} is empty")
            _check_index_tuple(subset, self.universe_size, "subset", str(i))
            covered.update(subset)
        missing = sorted(set(range(self.universe_size)) - covered)
        if missing:
            raise InvariantViolationError(f"elements not covered by any subset: {missing}")

    @classmethod
    def from_sets(cls, universe_size: int, sets: Iterable[Iterable[int]]) -> "SetCoverInstance":
        """Normalizing constructor: sorts each subset and drops duplicates within it."""
        return cls(universe_size, tuple(tuple(sorted(set(s))) for s in sets))

    @property
    def num_sets(self) -> int:
        return len(self.sets)


@dataclass(frozen=True)
class HypergraphInstance:
    """k-uniform hypergraph on vertices {0, ..., vertex_count-1}.

    Every edge has exactly ``uniformity`` distinct, sorted, in-range
    vertices.  Duplicate edges are permitted.  Vertices may be isolated.
    """

    vertex_count: int
    uniformity: int
    edges: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.vertex_count < 1:
            raise InvariantViolationError("hypergraph must contain at least one vertex")
        if self.uniformity < 2:
            raise InvariantViolationError("uniformity must be at least 2")
        if not self.edges:
            raise InvariantViolationError("hypergraph must contain at least one edge")
        for i, edge in enumerate(self.edges):
            if len(edge) != self.uniformity:
                raise InvariantViolationError(
                    f"edge {i} has {len(edge)} vertices, expected {self.uniformity}"
                )
            _check_index_tuple(edge, self.vertex_count, "edge", str(i))

    @classmethod
    def from_edges(
        cls, vertex_count: int, uniformity: int, edges: Iterable[Iterable[int]]
    ) -> "HypergraphInstance":
        return cls(vertex_count, uniformity, tuple(tuple(sorted(e)) for e in edges))

    @property
    def num_edges(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class GapParams:
    """Cover size bound d and exact gap factor eta > 1.

    ``eta`` is always an exact rational; comparisons against thresholds are
    therefore exact integer arithmetic, never floating point.
    """

    d: int
    eta: Fraction

    def __post_init__(self) -> None:
        if not isinstance(self.d, int) or isinstance(self.d, bool) or self.d < 1:
            raise InvariantViolationError("d must be a positive integer")
        if not isinstance(self.eta, Fraction):
            object.__setattr__(self, "eta", Fraction(self.eta))
        if self.eta <= 1:
            raise InvariantViolationError("eta must exceed 1")

    def in_range_set_cover(self, num_sets: int) -> bool:
        """Whether d > 2m / (3*eta - 1) for a family of m subsets."""
        return self.d > Fraction(2 * num_sets) / (3 * self.eta - 1)

    def in_range_hypergraph(self, vertex_count: int) -> bool:
        """Whether d > n / (2*eta) for n vertices."""
        return self.d > Fraction(vertex_count) / (2 * self.eta)

    def gap_bound(self) -> Fraction:
        """The cover size every NO instance must exceed: eta * d."""
        return self.eta * self.d


@dataclass(frozen=True)
class Verdict:
    """Distinguisher answer plus where and why it was decided.

    ``decided_at`` names the algorithm step that produced the answer.  The
    optional witness fields are filled per step: a zero-position count for
    coordinate-counting steps, a lattice vector and its squared projection
    norm for the norm comparison step, a rational solution and its Hamming
    weight for the zero-kernel shortcut.
    """

    answer: str
    decided_at: str
    zero_positions: int | None = None
    vector: tuple | None = None
    projection_norm_sq: int | None = None
    weight: int | None = None

    def __post_init__(self) -> None:
        if self.answer not in ("YES", "NO"):
            raise InvariantViolationError(f"verdict answer must be YES or NO, got {self.answer!r}")

    def witness_json(self) -> dict:
        """Witness fields as JSON-ready values (rationals become 'p/q' strings)."""
        out: dict = {}
        if self.zero_positions is not None:
            out["zero_positions"] = self.zero_positions
        if self.vector is not None:
            out["vector"] = [v if isinstance(v, int) else str(v) for v in self.vector]
        if self.projection_norm_sq is not None:
            out["projection_norm_sq"] = self.projection_norm_sq
        if self.weight is not None:
            out["hamming_weight"] = self.weight
        return out


def build_set_cover_incidence(inst: SetCoverInstance) -> IntMatrix:
    """0/1 incidence matrix, one row per element, one column per subset."""
    membership = [set(s) for s in inst.sets]
    rows = [
        tuple(1 if element in ms else 0 for ms in membership)
        for element in range(inst.universe_size)
    ]
    return IntMatrix(tuple(rows))


def build_hypergraph_incidence(inst: HypergraphInstance) -> IntMatrix:
    """0/1 incidence matrix, one row per edge, one column per vertex.

    Every row sums to the uniformity k.
    """
    rows = []
    for edge in inst.edges:
        members = set(edge)
        rows.append(tuple(1 if v in members else 0 for v in range(inst.vertex_count)))
    return IntMatrix(tuple(rows))


def append_ones_column(matrix: IntMatrix) -> IntMatrix:
    """The matrix extended on the right by an all-ones column."""
    return IntMatrix(tuple(row + (1,) for row in matrix.entries))


# --- JSON file format ------------------------------------------------------
#
# Set cover:
#   {"type": "set_cover", "universe_size": N, "sets": [[...], ...],
#    "d": D, "eta": {"num": P, "den": Q}}
# Hypergraph vertex cover:
#   {"type": "hypergraph_vc", "vertex_count": N, "k": K, "edges": [[...], ...],
#    "d": D, "eta": {"num": P, "den": Q}}
#
# All integers are decimal, lists are sorted ascending, files are UTF-8.


def _expect_int(obj: dict, key: str) -> int:
    if key not in obj:
        raise MalformedInputError(f"missing field {key!r}")
    v = obj[key]
    if not isinstance(v, int) or isinstance(v, bool):
        raise MalformedInputError(f"field {key!r} must be an integer, got {type(v).__name__}")
    return v


def _expect_index_lists(obj: dict, key: str) -> list[list[int]]:
    if key not in obj:
        raise MalformedInputError(f"missing field {key!r}")
    outer = obj[key]
    if not isinstance(outer, list):
        raise MalformedInputError(f"field {key!r} must be a list")
    for i, inner in enumerate(outer):
        if not isinstance(inner, list):
            raise MalformedInputError(f"{key}[{i}] must be a list")
        for v in inner:
            if not isinstance(v, int) or isinstance(v, bool):
                raise MalformedInputError(f"{key}[{i}] must contain integers only")
        if any(a >= b for a, b in zip(inner, inner[1:])):
            raise MalformedInputError(f"{key}[{i}] must be sorted ascending without repeats")
    return outer


def _parse_eta(obj: dict) -> Fraction:
    if "eta" not in obj:
        raise MalformedInputError("missing field 'eta'")
    eta = obj["eta"]
    if not isinstance(eta, dict):
        raise MalformedInputError("field 'eta' must be an object with 'num' and 'den'")
    num = _expect_int(eta, "num")
    den = _expect_int(eta, "den")
    if den <= 0 or num <= 0:
        raise MalformedInputError("eta numerator and denominator must be positive")
    return Fraction(num, den)


def parse_document(data: bytes | str) -> tuple[SetCoverInstance | HypergraphInstance, GapParams]:
    """Decode an instance file into (instance, gap parameters)."""
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise MalformedInputError(f"file is not valid UTF-8: {exc}") from None
    try:
        obj = json.loads(data)
    except json.JSONDecodeError as exc:
        raise MalformedInputError(f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    if not isinstance(obj, dict):
        raise MalformedInputError("top-level value must be an object")
    kind = obj.get("type")
    if kind == "set_cover":
        universe_size = _expect_int(obj, "universe_size")
        sets = _expect_index_lists(obj, "sets")
        inst: SetCoverInstance | HypergraphInstance = SetCoverInstance(
            universe_size, tuple(tuple(s) for s in sets)
        )
    elif kind == "hypergraph_vc":
        vertex_count = _expect_int(obj, "vertex_count")
        k = _expect_int(obj, "k")
        edges = _expect_index_lists(obj, "edges")
        inst = HypergraphInstance(vertex_count, k, tuple(tuple(e) for e in edges))
    else:
        raise MalformedInputError(f"field 'type' must be 'set_cover' or 'hypergraph_vc', got {kind!r}")
    params = GapParams(_expect_int(obj, "d"), _parse_eta(obj))
    return inst, params


def parse_instance(data: bytes | str) -> SetCoverInstance | HypergraphInstance:
    """Decode an instance file, discarding the gap parameters."""
    return parse_document(data)[0]


def serialize_instance(
    inst: SetCoverInstance | HypergraphInstance, params: GapParams
) -> bytes:
    """Encode an instance plus parameters as canonical UTF-8 JSON bytes.

    The byte output is deterministic: fixed key order, compact separators,
    one trailing newline.  Round-trips through :func:`parse_document`.
    """
    eta = {"num": params.eta.numerator, "den": params.eta.denominator}
    if isinstance(inst, SetCoverInstance):
        obj = {
            "type": "set_cover",
            "universe_size": inst.universe_size,
            "sets": [list(s) for s in inst.sets],
            "d": params.d,
            "eta": eta,
        }
    elif isinstance(inst, HypergraphInstance):
        obj = {
            "type": "hypergraph_vc",
            "vertex_count": inst.vertex_count,
            "k": inst.uniformity,
            "edges": [list(e) for e in inst.edges],
            "d": params.d,
            "eta": eta,
        }
    else:
        raise TypeError(f"cannot serialize {type(inst).__name__}")
    return (json.dumps(obj, separators=(",", ":")) + "\n").encode("utf-8")


def instance_digest(inst: SetCoverInstance | HypergraphInstance, params: GapParams) -> str:
    """Hex SHA-256 of the canonical serialization; stable content identity."""
    return hashlib.sha256(serialize_instance(inst, params)).hexdigest()
