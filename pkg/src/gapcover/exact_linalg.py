"""Exact integer and rational linear algebra.

Everything in this module works over arbitrary-precision Python integers or
`fractions.Fraction`; no floating point is used anywhere.  The central
objects are dense integer matrices and integer lattices presented by a
canonical basis, plus the handful of operations the distinguishers need:
integer kernels, lattice comparison, canonical difference vectors, exact
rank, and rational linear solving.

Lattice bases are stored in a Hermite normal form oriented on trailing
coordinates: each basis vector's last nonzero entry (its pivot) is positive,
pivot positions are distinct and strictly decreasing in storage order, and
every other basis vector is reduced modulo each pivot.  This orientation
makes the last coordinate of a lattice easy to reason about: at most one
basis vector has a nonzero last coordinate, and when one exists that entry
equals the gcd of the last coordinates of all lattice vectors.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionMismatchError, InclusionViolationError

__all__ = [
    "IntMatrix",
    "LatticeBasis",
    "RationalVector",
    "kernel_lattice_basis",
    "rank_fraction_free",
    "zero_coordinate_positions",
    "lattice_equal",
    "lattice_difference_vector",
    "projection_norm_sq",
    "solve_rational",
    "hamming_weight",
]


@dataclass(frozen=True)
class IntMatrix:
    """Dense matrix of arbitrary-precision integers, stored as row tuples."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if not self.entries:
            raise DimensionMismatchError("matrix must have at least one row")
        width = len(self.entries[0])
        if width == 0:
            raise DimensionMismatchError("matrix must have at least one column")
        for row in self.entries:
            if len(row) != width:
                raise DimensionMismatchError("ragged rows in matrix")
            for value in row:
                if not isinstance(value, int):
                    raise TypeError(f"matrix entries must be int, got {type(value).__name__}")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "IntMatrix":
        return cls(tuple(tuple(int(v) for v in row) for row in rows))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    def transpose(self) -> "IntMatrix":
        return IntMatrix(tuple(zip(*self.entries)))

    def mul_vec(self, x: Sequence[int]) -> tuple[int, ...]:
        """Matrix-vector product over the integers."""
        if len(x) != self.cols:
            raise DimensionMismatchError(
                f"vector of length {len(x)} against matrix with {self.cols} columns"
            )
        return tuple(sum(a * b for a, b in zip(row, x)) for row in self.entries)

    def debug_json(self) -> str:
        """Dump entries as arrays of decimal strings, preserving big integers."""
        return json.dumps([[str(v) for v in row] for row in self.entries])


def _hnf_rows(rows: list[list[int]], pivot_cols: int | None = None) -> tuple[list[list[int]], int]:
    """Reduce rows in place to row-style Hermite normal form.

    Pivots are searched column by column, left to right, over the first
    ``pivot_cols`` columns only (all columns by default); row operations
    always span the full width.  On return the first ``rank`` rows carry the
    pivots (positive, with every entry above a pivot reduced into
    ``[0, pivot)``) and all remaining rows are zero in every scanned column.

    Returns the (mutated) row list and the pivot count.
    """
    if not rows:
        return rows, 0
    ncols = len(rows[0])
    limit = ncols if pivot_cols is None else pivot_cols
    rank = 0
    for c in range(limit):
        # Euclidean phase: repeatedly pull the smallest nonzero entry of the
        # column up as pivot and shrink the others by nearest-integer
        # quotients.  Bounded quotients keep intermediate entries small,
        # unlike pairwise xgcd combinations which square them.
        while True:
            best = None
            for i in range(rank, len(rows)):
                v = rows[i][c]
                if v != 0 and (best is None or abs(v) < abs(rows[best][c])):
                    best = i
            if best is None:
                break
            rows[rank], rows[best] = rows[best], rows[rank]
            top = rows[rank]
            if top[c] < 0:
                rows[rank] = top = [-v for v in top]
            p = top[c]
            remaining = False
            for i in range(rank + 1, len(rows)):
                low = rows[i]
                if low[c] == 0:
                    continue
                q, r = divmod(low[c], p)
                if 2 * r > p:
                    q += 1
                if q:
                    for j in range(ncols):
                        low[j] -= q * top[j]
                if low[c] != 0:
                    remaining = True
            if not remaining:
                break
        if rank >= len(rows) or rows[rank][c] == 0:
            continue
        top = rows[rank]
        p = top[c]
        for i in range(rank):
            q = rows[i][c] // p
            if q:
                high = rows[i]
                for j in range(ncols):
                    high[j] -= q * top[j]
        rank += 1
    return rows, rank


def _trailing_pivot(vec: Sequence[int]) -> int:
    for j in range(len(vec) - 1, -1, -1):
        if vec[j] != 0:
            return j
    return -1


@dataclass(frozen=True)
class LatticeBasis:
    """Integer lattice given by a canonical basis.

    ``vectors`` holds linearly independent generators in the trailing-pivot
    Hermite normal form described in the module docstring, ordered by pivot
    position, highest first.  Equal lattices in the same ambient dimension
    have identical ``vectors``, so dataclass equality is lattice equality.
    The zero lattice is represented by an empty basis.
    """

    ambient_dim: int
    vectors: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.ambient_dim < 1:
            raise DimensionMismatchError("ambient dimension must be positive")
        for v in self.vectors:
            if len(v) != self.ambient_dim:
                raise DimensionMismatchError("basis vector length differs from ambient dimension")

    @classmethod
    def from_vectors(cls, ambient_dim: int, vectors: Iterable[Sequence[int]]) -> "LatticeBasis":
        """Build the lattice generated by ``vectors`` (dependencies allowed).

        The generators are reduced to the canonical basis; zero vectors are
        dropped.  Passing no vectors (or only zero vectors) yields the zero
        lattice.
        """
        vecs = [list(v) for v in vectors]
        for v in vecs:
            if len(v) != ambient_dim:
                raise DimensionMismatchError("generator length differs from ambient dimension")
        reversed_rows = [v[::-1] for v in vecs]
        reduced, rank = _hnf_rows(reversed_rows)
        canonical = tuple(tuple(row[::-1]) for row in reduced[:rank])
        return cls(ambient_dim, canonical)

    @property
    def rank(self) -> int:
        return len(self.vectors)

    def is_zero(self) -> bool:
        return not self.vectors

    def contains(self, vec: Sequence[int]) -> bool:
        """Exact membership test by back-reduction against the pivots."""
        if len(vec) != self.ambient_dim:
            raise DimensionMismatchError("vector length differs from ambient dimension")
        residue = list(vec)
        for row in self.vectors:
            p = _trailing_pivot(row)
            q, rem = divmod(residue[p], row[p])
            if rem != 0:
                return False
            if q:
                for j in range(p + 1):
                    residue[j] -= q * row[j]
        return not any(residue)

    def debug_json(self) -> str:
        """Dump basis vectors as arrays of decimal strings."""
        return json.dumps(
            {
                "ambient_dim": str(self.ambient_dim),
                "vectors": [[str(v) for v in row] for row in self.vectors],
            }
        )


def kernel_lattice_basis(matrix: IntMatrix) -> LatticeBasis:
    """Basis of the full integer kernel lattice {x : matrix @ x = 0}.

    The transpose is augmented with an identity block and row-reduced; the
    transform rows paired with the zero rows of the reduced transpose form a
    basis of the kernel as a lattice (every integer kernel vector is an
    integer combination of them, not merely a rational one).  The result is
    returned in canonical form.
    """
    m = matrix.cols
    n = matrix.rows
    transpose = matrix.transpose()
    augmented = [list(transpose.entries[i]) + [1 if j == i else 0 for j in range(m)] for i in range(m)]
    reduced, rank = _hnf_rows(augmented, pivot_cols=n)
    kernel_rows = [row[n:] for row in reduced[rank:]]
    return LatticeBasis.from_vectors(m, kernel_rows)


def rank_fraction_free(matrix: IntMatrix) -> int:
    """Rank over the rationals via Bareiss fraction-free elimination.

    Independent of the Hermite reduction path on purpose: useful as a cross
    check that rank(matrix) + kernel rank = column count.
    """
    rows = [list(r) for r in matrix.entries]
    nrows, ncols = matrix.rows, matrix.cols
    rank = 0
    prev = 1
    for c in range(ncols):
        if rank == nrows:
            break
        pivot = None
        for i in range(rank, nrows):
            if rows[i][c] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        p = rows[rank][c]
        for i in range(rank + 1, nrows):
            low = rows[i]
            f = low[c]
            for j in range(ncols):
                num = p * low[j] - f * rows[rank][j]
                q, rem = divmod(num, prev)
                assert rem == 0, "Bareiss one-step division must be exact"
                low[j] = q
        prev = p
        rank += 1
    return rank


def zero_coordinate_positions(lattice: LatticeBasis) -> frozenset[int]:
    """Coordinate positions at which every lattice vector vanishes.

    For the zero lattice this is every position in the ambient space.
    """
    support: set[int] = set()
    for row in lattice.vectors:
        for j, v in enumerate(row):
            if v != 0:
                support.add(j)
    return frozenset(range(lattice.ambient_dim)) - frozenset(support)


def _match_ambient(a: LatticeBasis, b: LatticeBasis) -> tuple[LatticeBasis, LatticeBasis]:
    """Lift the lower-dimensional operand via x -> (x, 0) when dims differ by one."""
    if a.ambient_dim == b.ambient_dim:
        return a, b
    if a.ambient_dim == b.ambient_dim + 1:
        return a, _embed(b)
    if b.ambient_dim == a.ambient_dim + 1:
        return _embed(a), b
    raise DimensionMismatchError(
        f"ambient dimensions {a.ambient_dim} and {b.ambient_dim} differ by more than one"
    )


def _embed(lattice: LatticeBasis) -> LatticeBasis:
    # appending a zero coordinate preserves the canonical form
    return LatticeBasis(lattice.ambient_dim + 1, tuple(v + (0,) for v in lattice.vectors))


def lattice_equal(a: LatticeBasis, b: LatticeBasis) -> bool:
    """Whether two lattices are equal, lifting across a one-dimension gap.

    When ambient dimensions differ by exactly one, the lower-dimensional
    lattice is embedded by appending a zero coordinate; any other mismatch
    raises :class:`DimensionMismatchError`.
    """
    a, b = _match_ambient(a, b)
    return a.vectors == b.vectors


def lattice_difference_vector(big: LatticeBasis, small: LatticeBasis) -> tuple[int, ...] | None:
    """A canonical vector of ``big`` that lies outside ``small``.

    Requires ``small`` to be a sublattice of ``big`` (after the same
    embedding rule as :func:`lattice_equal`); returns None when the lattices
    are equal.  The canonical choice is the basis vector of ``big`` whose
    last coordinate is the minimal positive value among nonzero last
    coordinates; the storage form guarantees at most one basis vector has a
    nonzero last coordinate and that its value is the gcd of the last
    coordinates over all of ``big``.  If that vector is absent or already
    lies in ``small``, the first stored basis vector outside ``small`` is
    returned instead.
    """
    big, small = _match_ambient(big, small)
    for v in small.vectors:
        if not big.contains(v):
            raise InclusionViolationError("second lattice is not contained in the first")
    if big.vectors == small.vectors:
        return None
    last = big.ambient_dim - 1
    for v in big.vectors:
        if v[last] != 0 and not small.contains(v):
            return v
    for v in big.vectors:
        if not small.contains(v):
            return v
    raise InclusionViolationError("lattices compare unequal but share every basis vector")


def projection_norm_sq(vec: Sequence[int], positions: Iterable[int]) -> int:
    """Squared Euclidean norm of the coordinate projection of ``vec``."""
    total = 0
    for i in positions:
        if not 0 <= i < len(vec):
            raise DimensionMismatchError(f"projection position {i} out of range")
        total += vec[i] * vec[i]
    return total


@dataclass(frozen=True)
class RationalVector:
    """Vector of exact rationals (Fraction keeps them reduced)."""

    entries: tuple[Fraction, ...]

    @classmethod
    def from_values(cls, values: Iterable[Fraction | int]) -> "RationalVector":
        return cls(tuple(Fraction(v) for v in values))

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)


def hamming_weight(vec: Iterable) -> int:
    """Number of nonzero entries."""
    return sum(1 for v in vec if v != 0)


def solve_rational(matrix: IntMatrix, target: Sequence[int]) -> RationalVector | None:
    """One rational solution of matrix @ x = target, or None if inconsistent.

    Forward elimination is fraction-free (Bareiss), so every intermediate
    entry stays an integer; back-substitution assigns zero to free columns
    and produces exact Fractions for the pivots.
    """
    if len(target) != matrix.rows:
        raise DimensionMismatchError(
            f"target of length {len(target)} against matrix with {matrix.rows} rows"
        )
    nrows, ncols = matrix.rows, matrix.cols
    rows = [list(r) + [int(t)] for r, t in zip(matrix.entries, target)]
    width = ncols + 1
    pivots: list[tuple[int, int]] = []
    rank = 0
    prev = 1
    for c in range(ncols):
        if rank == nrows:
            break
        pivot = None
        for i in range(rank, nrows):
            if rows[i][c] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        p = rows[rank][c]
        for i in range(rank + 1, nrows):
            low = rows[i]
            f = low[c]
            for j in range(width):
                num = p * low[j] - f * rows[rank][j]
                q, rem = divmod(num, prev)
                assert rem == 0, "Bareiss one-step division must be exact"
                low[j] = q
        pivots.append((rank, c))
        prev = p
        rank += 1
    for i in range(rank, nrows):
        if rows[i][ncols] != 0:
            return None
    solution = [Fraction(0)] * ncols
    for i, c in reversed(pivots):
        acc = Fraction(rows[i][ncols])
        for j in range(c + 1, ncols):
            if rows[i][j] and solution[j]:
                acc -= rows[i][j] * solution[j]
        solution[c] = acc / rows[i][c]
    return RationalVector(tuple(solution))
