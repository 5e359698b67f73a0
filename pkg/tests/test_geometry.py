"""Orbit geometry: cohomogeneity, polarity, slices, boundary, involutions."""
from fractions import Fraction

from repgeom.linalg import SpMat, rank
from repgeom.matrep import (Leaf, TensorR, TensorH, DirectSum, with_circle,
                            build_action)
from repgeom import geometry as G

from helpers import st, act


def test_cohomogeneity_small_knowns():
    assert G.cohomogeneity(act("SO(3): R^3")) == 1
    assert G.cohomogeneity(act("SO(3): S^2_0")) == 2
    assert G.cohomogeneity(act("SU(2): C^2")) == 1
    assert G.cohomogeneity(act("SO(3): R^7")) == 4
    assert G.cohomogeneity(act("SU(3): adjoint")) == 2
    assert G.cohomogeneity(act("SO(5): Lambda^2")) == 2
    assert G.cohomogeneity(act("G2: R^7")) == 1


def test_cohomogeneity_transitive_sphere_actions():
    # rank-one isotropy groups of symmetric spaces: c = 1
    for text in ["Spin(7): spin", "SO(6): R^6", "SP(2): C^4"]:
        assert G.cohomogeneity(act(text)) == 1


def test_dimension_identities():
    for text in ["SO(3): R^7", "SU(3): C^3", "SP(2): C^4",
                 "SO(3): R^3 (x)_R SO(3): R^3"]:
        a = act(text)
        rep = G.analyze(a)
        assert rep.cohomogeneity + rep.orbit_dim == a.dim_V
        assert rep.orbit_dim + rep.principal_isotropy_dim == a.group_dim


def test_orbit_dim_and_slice():
    a = act("SO(3): R^3")
    v = [Fraction(1), Fraction(0), Fraction(0)]
    assert G.orbit_dim_at(a, v) == 2
    sd = G.slice_at(a, v)
    assert sd.orbit_dim == 2
    assert len(sd.isotropy_coeffs) == 1          # rotations about v
    assert len(sd.normal_space) == 1
    zero = [Fraction(0)] * 3
    assert G.orbit_dim_at(a, zero) == 0


def test_polarity():
    assert G.is_polar(act("SO(3): S^2_0"))
    assert G.is_polar(act("SU(3): adjoint"))
    assert G.is_polar(act("SO(5): Lambda^2"))
    assert not G.is_polar(act("SO(3): R^7"))
    assert not G.is_polar(act("SU(2): C^4"))
    assert not G.is_polar(act("SU(3): S^2"))


def test_copolarity_upper_bound():
    assert G.copolarity_upper_bound(act("SO(3): S^2_0")) == 0
    assert G.copolarity_upper_bound(act("SU(3): adjoint")) == 0


def test_slice_cohomogeneity_on_sums():
    sums = [
        DirectSum(Leaf(st("A", 1), (2,)), Leaf(st("A", 1), (4,))),
        DirectSum(Leaf(st("A", 1), (1,)), Leaf(st("A", 1), (1,))),
        DirectSum(Leaf(st("A", 2), (1, 0)), Leaf(st("A", 2), (1, 1))),
        DirectSum(Leaf(st("B", 2), (1, 0)), Leaf(st("B", 2), (0, 1))),
        DirectSum(Leaf(st("A", 1), (2,)), Leaf(st("A", 1), (2,))),
    ]
    for e in sums:
        assert G.slice_cohomogeneity_check(build_action(e))


def test_product_slice_identity():
    so3 = Leaf(st("A", 1), (2,))
    so4 = TensorH(Leaf(st("A", 1), (1,)), Leaf(st("A", 1), (1,)))
    prods = [TensorR(so3, so3),
             TensorR(so3, Leaf(st("G", 2), (1, 0))),
             TensorR(so4, Leaf(st("B", 3), (0, 0, 1)))]
    for e in prods:
        assert G.product_slice_check(build_action(e))


def test_no_boundary_certificates():
    assert G.no_boundary_certificate(act("SO(3): R^7")) == G.BOUNDARY_NO
    assert G.no_boundary_certificate(act("SU(2): C^4")) == G.BOUNDARY_NO
    assert G.no_boundary_certificate(
        build_action(with_circle(Leaf(st("A", 1), (1,))))) != G.BOUNDARY_YES


def test_boundary_witness_on_symmetric_square():
    a = act("SU(3): S^2")
    rep = G.analyze(a)
    assert rep.boundary == G.BOUNDARY_YES
    assert rep.cohomogeneity == 4 and not rep.polar


def test_analyze_report_consistency():
    rep = G.analyze(act("SU(2): C^4"))
    assert rep.cohomogeneity == 5
    assert not rep.polar
    assert rep.boundary == G.BOUNDARY_NO
    assert rep.sample_seed == G.DEFAULT_SEED


def test_rotation_involution_and_audit():
    a = act("SO(3): R^7")
    w = G.rotation_involution(a)
    assert (w * w - SpMat.eye(a.dim_V)).is_zero()
    audit = G.involution_audit(a, w)
    assert audit.normalizes
    assert audit.f == 4
    assert audit.formula_holds


def test_involution_audit_rejects_non_orthogonal():
    a = act("SO(3): R^7")
    bad = SpMat.eye(a.dim_V, scale=Fraction(2))
    try:
        G.involution_audit(a, bad)
    except AssertionError:
        pass
    else:
        raise AssertionError("non-involution should be rejected")


def test_principal_isotropy():
    sd = G.principal_isotropy(act("SO(3): R^3"))
    assert len(sd.isotropy_coeffs) == 1
    assert rank([m.apply(sd.base_point) for m in sd.isotropy_mats]) == 0
    sd = G.principal_isotropy(act("SO(3): R^7"))
    assert sd.isotropy_coeffs == []
