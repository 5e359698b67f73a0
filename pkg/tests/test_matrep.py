"""Matrix models: weight modules, bilinear forms, real/quaternionic forms."""
from fractions import Fraction

import pytest

from repgeom.rootsys import build_root_system, weyl_dim
from repgeom.irrepmeta import fs_type, REAL, COMPLEX, QUATERNIONIC
from repgeom.linalg import SpMat
from repgeom.matrep import (construct_weight_module, invariant_bilinear_form,
                            structure_map, SYMMETRIC, ANTISYMMETRIC,
                            Leaf, Circle, TorusRep, TensorR, TensorC, TensorH,
                            DirectSum, with_circle, group_signature,
                            leaf_complex, complexify, build_action,
                            quaternionic_structure)

from helpers import st


def test_weight_module_dimension():
    cases = [(st("A", 1), (3,)), (st("A", 2), (1, 1)), (st("B", 2), (0, 1)),
             (st("C", 3), (0, 0, 1)), (st("D", 4), (0, 0, 0, 1)),
             (st("G", 2), (1, 0))]
    for t, w in cases:
        wm = construct_weight_module(t, w)
        rs = build_root_system(t)
        assert wm.dim == weyl_dim(rs, w)
        assert len(wm.weights) == wm.dim


def test_bilinear_form_kind_matches_fs_type():
    cases = [(st("A", 1), (1,), ANTISYMMETRIC),
             (st("A", 1), (2,), SYMMETRIC),
             (st("A", 2), (1, 0), None),
             (st("A", 2), (1, 1), SYMMETRIC),
             (st("B", 2), (0, 1), ANTISYMMETRIC),
             (st("B", 3), (0, 0, 1), SYMMETRIC)]
    for t, w, kind in cases:
        wm = construct_weight_module(t, w)
        got, form = invariant_bilinear_form(wm)
        assert got == kind
        if kind is None:
            assert form is None


def test_structure_map_sign():
    for t, w in [(st("A", 1), (1,)), (st("A", 1), (2,)), (st("A", 1), (4,)),
                 (st("B", 2), (1, 0)), (st("B", 2), (0, 1)),
                 (st("C", 3), (1, 0, 0)), (st("B", 3), (0, 0, 1))]:
        wm = construct_weight_module(t, w)
        sign, s = structure_map(wm)
        rs = build_root_system(t)
        expected = 1 if fs_type(rs, w) == REAL else -1
        assert sign == expected


def test_build_action_dimensions():
    cases = [
        (Leaf(st("A", 1), (2,)), 3, 3),          # SO(3) on R^3
        (Leaf(st("A", 1), (1,)), 4, 3),          # SU(2) on C^2 = R^4
        (Leaf(st("A", 2), (1, 0)), 6, 8),        # SU(3) on C^3
        (Leaf(st("B", 3), (0, 0, 1)), 8, 21),    # Spin(7) on R^8
        (with_circle(Leaf(st("A", 1), (1,))), 4, 4),   # U(2) on C^2
        (TensorR(Leaf(st("A", 1), (2,)), Leaf(st("A", 1), (2,))), 9, 6),
        (TensorH(Leaf(st("A", 1), (1,)), Leaf(st("A", 1), (1,))), 4, 6),
        (TensorC(Leaf(st("A", 2), (1, 0)), Leaf(st("A", 2), (1, 0))), 18, 16),
        (DirectSum(Leaf(st("A", 1), (2,)), Leaf(st("A", 1), (4,))), 8, 3),
        (TorusRep(((1,), (2,))), 4, 1),
        (Circle(1), 2, 1),
    ]
    for expr, dim_v, dim_g in cases:
        a = build_action(expr)
        assert a.dim_V == dim_v
        assert a.group_dim == dim_g
        assert len(a.generators) == dim_g


def test_build_action_consistency_checks():
    # bracket closure and gram invariance, verified exactly
    for expr in [Leaf(st("A", 1), (4,)),
                 Leaf(st("B", 2), (0, 1)),
                 TensorR(Leaf(st("A", 1), (2,)), Leaf(st("A", 1), (2,))),
                 TensorH(Leaf(st("A", 1), (1,)), Leaf(st("A", 1), (1,))),
                 with_circle(Leaf(st("A", 2), (1, 0)))]:
        a = build_action(expr)
        a.check()
        for x in a.generators:
            assert x.is_skew_wrt(a.gram)


def test_quaternionic_structure():
    for expr in [Leaf(st("A", 1), (1,)), Leaf(st("B", 2), (0, 1))]:
        j = quaternionic_structure(expr)
        n = j.nrows
        assert (j * j + SpMat.eye(n)).is_zero()
        a = build_action(expr)
        for x in a.generators:
            assert (x * j - j * x).is_zero()


def test_complexify_requires_complex_structure():
    with pytest.raises(TypeError):
        complexify(Leaf(st("A", 1), (2,)))          # real type
    with pytest.raises(TypeError):
        complexify(TensorR(Leaf(st("A", 1), (1,)), Leaf(st("A", 1), (1,))))
    crep = complexify(Leaf(st("A", 2), (1, 0)))
    assert crep.c == 3


def test_tensor_h_requires_quaternionic_factors():
    with pytest.raises(TypeError):
        build_action(TensorH(Leaf(st("A", 1), (2,)), Leaf(st("A", 1), (1,))))


def test_direct_sum_requires_same_group():
    with pytest.raises(AssertionError):
        build_action(DirectSum(Leaf(st("A", 1), (2,)),
                               Leaf(st("A", 2), (1, 0))))


def test_group_signature():
    su2 = Leaf(st("A", 1), (1,))
    assert group_signature(su2) == (("A", 1),)
    assert group_signature(with_circle(su2)) == (("A", 1), ("circle",))
    assert group_signature(TensorR(su2, Leaf(st("G", 2), (1, 0)))) == \
        (("A", 1), ("G", 2))
    assert group_signature(DirectSum(su2, Leaf(st("A", 1), (3,)))) == \
        (("A", 1),)


def test_leaf_complex_matches_weyl_dim():
    for t, w in [(st("A", 2), (1, 0)), (st("B", 2), (0, 1)),
                 (st("D", 5), (0, 0, 0, 0, 1))]:
        crep = leaf_complex(t, w)
        assert crep.c == weyl_dim(build_root_system(t), w)


def test_action_cache_returns_same_object():
    e = Leaf(st("A", 1), (6,))
    assert build_action(e) is build_action(Leaf(st("A", 1), (6,)))
