"""Exception types shared across the package.

Each error class corresponds to one failure mode that callers are expected
to tell apart, in particular the CLI which maps them to exit codes.
"""


class GapCoverError(Exception):
    """Base class for all errors raised by this package."""


class MalformedInputError(GapCoverError):
    """Instance data could not be decoded (bad JSON, missing or mistyped fields)."""


class InvariantViolationError(GapCoverError):
    """Decoded data is structurally valid JSON but violates an instance invariant."""


class ParameterRangeError(GapCoverError):
    """Gap parameters (d, eta) fall outside the range the distinguishers require."""


class InfeasibleParametersError(GapCoverError):
    """No instance of the requested promise class exists at the requested sizes."""


class BudgetExceededError(GapCoverError):
    """An exhaustive search exceeded its node budget or size cap."""


class NoSolutionError(GapCoverError):
    """A linear system that the caller expected to be solvable is inconsistent."""


class DimensionMismatchError(GapCoverError):
    """Operands have incompatible dimensions."""


class InclusionViolationError(GapCoverError):
    """A lattice expected to contain another does not."""
