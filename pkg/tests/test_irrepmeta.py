"""Weight multiplicities, Frobenius-Schur types, real dimensions."""
import pytest

from repgeom.rootsys import build_root_system, weyl_dim, \
    dominant_weights_up_to_dim
from repgeom.irrepmeta import (weight_multiplicities, zero_weight_dim,
                               fs_type, product_fs_type, real_dim,
                               REAL, COMPLEX, QUATERNIONIC)

from helpers import st


def test_fs_type_frozen():
    cases = [
        (st("A", 1), (1,), QUATERNIONIC),
        (st("A", 1), (2,), REAL),
        (st("A", 1), (3,), QUATERNIONIC),
        (st("A", 2), (1, 0), COMPLEX),
        (st("A", 2), (1, 1), REAL),
        (st("A", 2), (2, 0), COMPLEX),
        (st("B", 2), (1, 0), REAL),
        (st("B", 2), (0, 1), QUATERNIONIC),
        (st("B", 3), (0, 0, 1), REAL),
        (st("C", 3), (1, 0, 0), QUATERNIONIC),
        (st("C", 3), (0, 1, 0), REAL),
        (st("D", 4), (1, 0, 0, 0), REAL),
        (st("D", 5), (0, 0, 0, 0, 1), COMPLEX),
        (st("G", 2), (1, 0), REAL),
        (st("E", 6), (1, 0, 0, 0, 0, 0), COMPLEX),
        (st("E", 7), (0, 0, 0, 0, 0, 0, 1), QUATERNIONIC),
    ]
    for t, w, kind in cases:
        assert fs_type(build_root_system(t), w) == kind


def test_product_fs_type():
    assert product_fs_type([REAL, REAL]) == REAL
    assert product_fs_type([REAL, COMPLEX]) == COMPLEX
    assert product_fs_type([REAL, QUATERNIONIC]) == QUATERNIONIC
    assert product_fs_type([COMPLEX, COMPLEX]) == COMPLEX
    assert product_fs_type([COMPLEX, QUATERNIONIC]) == COMPLEX
    assert product_fs_type([QUATERNIONIC, QUATERNIONIC]) == REAL
    assert product_fs_type([QUATERNIONIC, QUATERNIONIC, QUATERNIONIC]) \
        == QUATERNIONIC


def test_real_dim():
    # real type: dim over R equals the complex dimension; otherwise doubled
    cases = [
        (st("A", 1), (1,), 4),        # C^2 as R^4
        (st("A", 1), (2,), 3),        # R^3
        (st("A", 2), (1, 0), 6),      # C^3 as R^6
        (st("B", 3), (0, 0, 1), 8),   # real spin module
        (st("C", 3), (1, 0, 0), 12),
        (st("E", 6), (1, 0, 0, 0, 0, 0), 54),
    ]
    for t, w, d in cases:
        assert real_dim(build_root_system(t), w) == d


def test_zero_weight_dim():
    rs = build_root_system(st("A", 2))
    assert zero_weight_dim(rs, (1, 1)) == 2       # adjoint: Cartan subalgebra
    assert zero_weight_dim(rs, (1, 0)) == 0
    rs = build_root_system(st("A", 1))
    assert zero_weight_dim(rs, (2,)) == 1
    assert zero_weight_dim(rs, (3,)) == 0
    rs = build_root_system(st("B", 3))
    assert zero_weight_dim(rs, (1, 0, 0)) == 1    # vector module of SO(7)


def test_weight_multiplicities_a1():
    rs = build_root_system(st("A", 1))
    for k in range(7):
        mult = weight_multiplicities(rs, (k,))
        assert mult == {(k - 2 * i,): 1 for i in range(k + 1)}


def test_weight_multiplicities_adjoint():
    for t in [st("A", 2), st("B", 2), st("G", 2)]:
        rs = build_root_system(t)
        adj = rs.root_labels(rs.highest_root())
        mult = weight_multiplicities(rs, adj)
        zero = tuple(0 for _ in range(rs.rank))
        assert mult[zero] == rs.rank
        nonzero = {w for w in mult if w != zero}
        assert all(mult[w] == 1 for w in nonzero)
        assert len(nonzero) == 2 * rs.n_positive


def test_weight_multiplicities_sum_is_dimension():
    for t in [st("A", 3), st("B", 3), st("C", 3), st("D", 4), st("G", 2)]:
        rs = build_root_system(t)
        for w in dominant_weights_up_to_dim(rs, 120):
            assert sum(weight_multiplicities(rs, w).values()) == \
                weyl_dim(rs, w)


def test_weight_multiplicities_rejects_non_dominant():
    rs = build_root_system(st("A", 2))
    with pytest.raises(ValueError):
        weight_multiplicities(rs, (-1, 0))
