"""Exact lattice distinguishers for gap covering problems.

The package decides promise instances of gap set cover and gap hypergraph
vertex cover by looking at the kernel lattice of the incidence matrix, in
exact integer/rational arithmetic throughout.  Exhaustive oracles, seeded
instance generators, structural invariant audits, and a command line front
end round it out.
"""

from .distinguisher import (
    Threshold,
    distinguish_hypergraph_vc,
    distinguish_set_cover,
    distinguish_zero_kernel,
)
from .errors import (
    BudgetExceededError,
    DimensionMismatchError,
    GapCoverError,
    InclusionViolationError,
    InfeasibleParametersError,
    InvariantViolationError,
    MalformedInputError,
    NoSolutionError,
    ParameterRangeError,
)
from .exact_linalg import (
    IntMatrix,
    LatticeBasis,
    RationalVector,
    hamming_weight,
    kernel_lattice_basis,
    lattice_difference_vector,
    lattice_equal,
    projection_norm_sq,
    rank_fraction_free,
    solve_rational,
    zero_coordinate_positions,
)
from .generators import (
    BatchItem,
    generate_no_hypergraph,
    generate_no_set_cover,
    generate_promise_batch,
    generate_yes_hypergraph,
    generate_yes_set_cover,
)
from .instances import (
    GapParams,
    HypergraphInstance,
    SetCoverInstance,
    Verdict,
    append_ones_column,
    build_hypergraph_incidence,
    build_set_cover_incidence,
    instance_digest,
    parse_document,
    parse_instance,
    serialize_instance,
)
from .lemmas import LemmaReport, LemmaViolation, audit_batch, audit_instance
from .oracle import (
    DEFAULT_NODE_BUDGET,
    OracleResult,
    classify_hypergraph,
    classify_set_cover,
    has_exact_vertex_cover,
    min_cover_size,
    min_exact_cover_size,
    min_vertex_cover_size,
)

__version__ = "0.1.0"

__all__ = [
    "BatchItem",
    "BudgetExceededError",
    "DEFAULT_NODE_BUDGET",
    "DimensionMismatchError",
    "GapCoverError",
    "GapParams",
    "HypergraphInstance",
    "InclusionViolationError",
    "InfeasibleParametersError",
    "IntMatrix",
    "InvariantViolationError",
    "LatticeBasis",
    "LemmaReport",
    "LemmaViolation",
    "MalformedInputError",
    "NoSolutionError",
    "OracleResult",
    "ParameterRangeError",
    "RationalVector",
    "SetCoverInstance",
    "Threshold",
    "Verdict",
    "append_ones_column",
    "audit_batch",
    "audit_instance",
    "build_hypergraph_incidence",
    "build_set_cover_incidence",
    "classify_hypergraph",
    "classify_set_cover",
    "distinguish_hypergraph_vc",
    "distinguish_set_cover",
    "distinguish_zero_kernel",
    "generate_no_hypergraph",
    "generate_no_set_cover",
    "generate_promise_batch",
    "generate_yes_hypergraph",
    "generate_yes_set_cover",
    "hamming_weight",
    "has_exact_vertex_cover",
    "instance_digest",
    "kernel_lattice_basis",
    "lattice_difference_vector",
    "lattice_equal",
    "min_cover_size",
    "min_exact_cover_size",
    "min_vertex_cover_size",
    "parse_document",
    "parse_instance",
    "projection_norm_sq",
    "rank_fraction_free",
    "serialize_instance",
    "solve_rational",
    "zero_coordinate_positions",
]
