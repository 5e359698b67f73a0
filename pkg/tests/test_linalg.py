"""Exact sparse/dense linear algebra: rank, nullspace, inverse, kron."""
from fractions import Fraction

from hypothesis import given, settings, strategies as hst

from repgeom.linalg import (SpMat, kron, rank, nullspace, row_space_contains,
                            solve_upper, invert, unit_vector, dot,
                            IncrementalKernel)

from helpers import frac_mat

small_int = hst.integers(min_value=-6, max_value=6)
small_matrix = hst.integers(min_value=1, max_value=5).flatmap(
    lambda n: hst.integers(min_value=1, max_value=5).flatmap(
        lambda m: hst.lists(
            hst.lists(small_int, min_size=m, max_size=m),
            min_size=n, max_size=n)))


def to_fr(rows):
    return [[Fraction(x) for x in row] for row in rows]


def test_rank_hand_values():
    assert rank(frac_mat([[1, 2], [2, 4]])) == 1
    assert rank(frac_mat([[1, 2], [3, 4]])) == 2
    assert rank(frac_mat([[0, 0, 0]])) == 0
    assert rank(frac_mat([[1, 2, 3], [4, 5, 6], [7, 8, 9]])) == 2
    assert rank(frac_mat([["1/2", "1/3"], ["1/4", "1/6"]])) == 1


def test_nullspace_hand_values():
    ns = nullspace(frac_mat([[1, 2, 3], [4, 5, 6], [7, 8, 9]]), ncols=3)
    assert len(ns) == 1
    x = ns[0]
    # the kernel is spanned by (1, -2, 1)
    assert x[0] == x[2] and x[1] == -2 * x[0] and x[0] != 0
    assert nullspace(frac_mat([[1, 0], [0, 1]]), ncols=2) == []


def test_solve_and_invert():
    a = frac_mat([[2, 1], [1, 3]])
    inv = invert(a)
    for i in range(2):
        for j in range(2):
            s = sum(a[i][k] * inv[k][j] for k in range(2))
            assert s == (1 if i == j else 0)


def test_spmat_basics():
    m = SpMat(2, 3)
    m[(0, 1)] = Fraction(5)
    m[(1, 2)] = Fraction(-1, 2)
    assert m.transpose()[(1, 0)] == 5
    assert m.apply([Fraction(0), Fraction(1), Fraction(2)]) == \
        [Fraction(5), Fraction(-1)]
    eye = SpMat.eye(3)
    assert (eye * eye).to_dense() == eye.to_dense()
    assert m.scale(2)[(0, 1)] == 10


def test_kron_dimensions_and_values():
    a = SpMat(2, 2)
    a[(0, 0)] = Fraction(1)
    a[(1, 1)] = Fraction(2)
    b = SpMat(2, 2)
    b[(0, 1)] = Fraction(3)
    k = kron(a, b)
    assert (k.nrows, k.ncols) == (4, 4)
    assert k[(0, 1)] == 3
    assert k[(2, 3)] == 6


@settings(max_examples=60, deadline=None)
@given(small_matrix)
def test_rank_transpose_and_nullity(rows):
    a = to_fr(rows)
    r = rank([row[:] for row in a])
    at = [list(col) for col in zip(*a)]
    assert rank([row[:] for row in at]) == r
    ns = nullspace([row[:] for row in a], ncols=len(a[0]))
    assert len(ns) == len(a[0]) - r
    for x in ns:
        for row in a:
            assert dot(row, x) == 0
    # nullspace vectors are independent
    assert rank([list(x) for x in ns]) == len(ns)


@settings(max_examples=60, deadline=None)
@given(small_matrix)
def test_row_space_membership(rows):
    a = to_fr(rows)
    for row in a:
        assert row_space_contains([r[:] for r in a], row)
    s = [sum(col) for col in zip(*a)]
    assert row_space_contains([r[:] for r in a], s)


@settings(max_examples=60, deadline=None)
@given(small_matrix)
def test_incremental_kernel_matches_nullspace(rows):
    a = to_fr(rows)
    ncols = len(a[0])
    ker = IncrementalKernel(ncols)
    for row in a:
        ker.add(row[:])
    basis = ker.kernel()
    assert len(basis) == ncols - rank([r[:] for r in a])
    for x in basis:
        for row in a:
            assert dot(row, x) == 0


@settings(max_examples=40, deadline=None)
@given(hst.lists(hst.lists(small_int, min_size=3, max_size=3),
                 min_size=3, max_size=3))
def test_invert_roundtrip(rows):
    a = to_fr(rows)
    if rank([r[:] for r in a]) < 3:
        return
    inv = invert([r[:] for r in a])
    for i in range(3):
        for j in range(3):
            s = sum(a[i][k] * inv[k][j] for k in range(3))
            assert s == (1 if i == j else 0)


def test_solve_upper():
    rows = frac_mat([[1, 2], [0, 3]])
    rhs = [Fraction(5), Fraction(6)]
    x = solve_upper(rows, rhs)
    assert x == [Fraction(1), Fraction(2)]


def test_unit_vector():
    assert unit_vector(4, 2) == [0, 0, 1, 0]
