import random
from fractions import Fraction

from conftest import brute_force_kernel

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gapcover.errors import DimensionMismatchError, InclusionViolationError
from gapcover.exact_linalg import (
    IntMatrix,
    LatticeBasis,
    kernel_lattice_basis,
    lattice_difference_vector,
    lattice_equal,
    projection_norm_sq,
    rank_fraction_free,
    solve_rational,
    zero_coordinate_positions,
)


def test_matrix_construction_and_transpose():
    m = IntMatrix.from_rows([[1, 2, 3], [4, 5, 6]])
    assert m.rows == 2 and m.cols == 3
    assert m.transpose().entries == ((1, 4), (2, 5), (3, 6))


def test_matrix_rejects_ragged_rows():
    with pytest.raises(DimensionMismatchError):
        IntMatrix.from_rows([[1, 2], [3]])


def test_mul_vec():
    m = IntMatrix.from_rows([[1, 1, 0], [0, 1, 1]])
    assert m.mul_vec((1, -1, 1)) == (0, 0)
    assert m.mul_vec((2, 3, 5)) == (5, 8)


def test_kernel_of_chain_matrix():
    m = IntMatrix.from_rows([[1, 1, 0], [0, 1, 1]])
    k = kernel_lattice_basis(m)
    assert k.vectors == ((1, -1, 1),)


def test_kernel_of_two_block_incidence():
    # elements x sets incidence for sets {0,1},{2,3},{0,2},{1,3}
    m = IntMatrix.from_rows([[1, 0, 1, 0], [1, 0, 0, 1], [0, 1, 1, 0], [0, 1, 0, 1]])
    k = kernel_lattice_basis(m)
    assert k.rank == 1
    assert lattice_equal(k, LatticeBasis.from_vectors(4, [(1, 1, -1, -1)]))


def test_kernel_of_identity_is_zero_lattice():
    m = IntMatrix.from_rows([[1 if i == j else 0 for j in range(5)] for i in range(5)])
    k = kernel_lattice_basis(m)
    assert k.is_zero()
    assert zero_coordinate_positions(k) == frozenset(range(5))


def test_canonical_form_prefers_trailing_pivots():
    # span{(1,2),(0,3)} has last-coordinate gcd 1; exactly one canonical
    # vector may keep a nonzero last coordinate and it must equal that gcd.
    b = LatticeBasis.from_vectors(2, [(1, 2), (0, 3)])
    assert b.vectors == ((2, 1), (3, 0))
    b2 = LatticeBasis.from_vectors(2, [(1, 0), (0, 2)])
    assert b2.vectors == ((0, 2), (1, 0))


def test_canonical_form_is_idempotent():
    b = LatticeBasis.from_vectors(3, [(2, 4, 6), (1, 1, 1), (0, 0, 5)])
    again = LatticeBasis.from_vectors(3, list(b.vectors))
    assert again.vectors == b.vectors


def test_contains_membership_and_rejection():
    b = LatticeBasis.from_vectors(2, [(1, 2), (0, 3)])
    assert b.contains((1, 2))
    assert b.contains((2, 4))
    assert b.contains((1, -1))  # (1,2) - (0,3)
    assert not b.contains((0, 1))
    with pytest.raises(DimensionMismatchError):
        b.contains((1, 2, 3))


def test_lattice_equal_ignores_presentation():
    a = LatticeBasis.from_vectors(3, [(1, 0, 1), (0, 1, 1)])
    b = LatticeBasis.from_vectors(3, [(1, 1, 2), (0, 1, 1)])
    assert lattice_equal(a, b)
    c = LatticeBasis.from_vectors(3, [(1, 0, 1)])
    assert not lattice_equal(a, c)


def test_difference_vector_basic():
    big = LatticeBasis.from_vectors(2, [(1, 0), (0, 2)])
    small = LatticeBasis.from_vectors(2, [(1, 0)])
    diff = lattice_difference_vector(big, small)
    assert diff == (0, 2)
    assert lattice_difference_vector(big, big) is None


def test_difference_vector_embeds_smaller_ambient():
    big = LatticeBasis.from_vectors(3, [(1, 0, 0), (0, 1, 1)])
    small = LatticeBasis.from_vectors(2, [(1, 0)])
    diff = lattice_difference_vector(big, small)
    assert diff is not None and big.contains(diff)
    assert not small.contains(diff[:2]) or diff[2] != 0


def test_difference_vector_requires_inclusion():
    a = LatticeBasis.from_vectors(2, [(1, 0)])
    b = LatticeBasis.from_vectors(2, [(0, 1)])
    with pytest.raises(InclusionViolationError):
        lattice_difference_vector(a, b)


def test_difference_vector_dimension_gap_too_wide():
    big = LatticeBasis.from_vectors(4, [(1, 0, 0, 0)])
    small = LatticeBasis.from_vectors(2, [(1, 0)])
    with pytest.raises(DimensionMismatchError):
        lattice_difference_vector(big, small)


def test_zero_coordinate_positions():
    b = LatticeBasis.from_vectors(4, [(1, 0, -1, 0), (0, 0, 2, 0)])
    assert zero_coordinate_positions(b) == frozenset({1, 3})


def test_projection_norm_sq():
    assert projection_norm_sq((3, -2, 5, 1), [0, 2]) == 34
    assert projection_norm_sq((3, -2, 5, 1), []) == 0


def test_rank_fraction_free():
    assert rank_fraction_free(IntMatrix.from_rows([[1, 2], [2, 4]])) == 1
    assert rank_fraction_free(IntMatrix.from_rows([[1, 0], [0, 1]])) == 2
    assert rank_fraction_free(IntMatrix.from_rows([[0, 0], [0, 0]])) == 0


def test_solve_rational_unique_and_fractional():
    m = IntMatrix.from_rows([[2, 0], [0, 3]])
    sol = solve_rational(m, (1, 1))
    assert sol is not None
    assert tuple(sol.entries) == (Fraction(1, 2), Fraction(1, 3))


def test_solve_rational_underdetermined_and_inconsistent():
    wide = IntMatrix.from_rows([[1, 1]])
    sol = solve_rational(wide, (1,))
    assert sol is not None and sum(sol.entries) == 1
    bad = IntMatrix.from_rows([[1, 0], [1, 0], [0, 1]])
    assert solve_rational(bad, (1, 2, 1)) is None


ints = st.integers(min_value=-4, max_value=4)


@st.composite
def small_matrices(draw):
    rows = draw(st.integers(min_value=1, max_value=5))
    cols = draw(st.integers(min_value=1, max_value=5))
    data = [[draw(ints) for _ in range(cols)] for _ in range(rows)]
    return IntMatrix.from_rows(data)


@given(small_matrices())
@settings(max_examples=120, deadline=None)
def test_kernel_soundness_and_rank_nullity(m):
    k = kernel_lattice_basis(m)
    for vec in k.vectors:
        assert m.mul_vec(vec) == tuple([0] * m.rows)
    assert rank_fraction_free(m) + k.rank == m.cols


@given(small_matrices(), st.lists(ints, min_size=2, max_size=2))
@settings(max_examples=80, deadline=None)
def test_kernel_closed_under_integer_combinations(m, coeffs):
    k = kernel_lattice_basis(m)
    if k.rank < 2:
        combo = tuple(coeffs[0] * v for v in k.vectors[0]) if k.rank == 1 else None
    else:
        a, b = k.vectors[0], k.vectors[1]
        combo = tuple(coeffs[0] * x + coeffs[1] * y for x, y in zip(a, b))
    if combo is not None:
        assert k.contains(combo)


@given(small_matrices(), st.lists(ints, min_size=5, max_size=5))
@settings(max_examples=80, deadline=None)
def test_solve_rational_hits_planted_targets(m, xs):
    x = xs[: m.cols]
    target = m.mul_vec(x)
    sol = solve_rational(m, target)
    assert sol is not None
    check = [sum(Fraction(m.entries[i][j]) * sol.entries[j] for j in range(m.cols)) for i in range(m.rows)]
    assert check == [Fraction(t) for t in target]


def test_kernel_completeness_against_brute_force():
    rng = random.Random(17)
    for _ in range(40):
        rows = rng.randint(1, 5)
        cols = rng.randint(1, 5)
        m = IntMatrix.from_rows([[rng.randint(0, 1) for _ in range(cols)] for _ in range(rows)])
        k = kernel_lattice_basis(m)
        for vec in brute_force_kernel(m):
            assert k.contains(vec), (m.entries, vec, k.vectors)
