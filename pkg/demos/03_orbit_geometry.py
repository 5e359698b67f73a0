"""Orbit-space geometry of sample actions.

Computes cohomogeneity, polarity, copolarity bounds and the boundary
status for a handful of actions, all in exact rational arithmetic.
"""
from repgeom.cli import parse_rep
from repgeom.matrep import build_action
from repgeom import geometry as G


def main():
    texts = ["SO(3): S^2_0", "SU(3): adjoint", "SO(3): R^7",
             "SU(2): C^4", "SU(3): S^2", "SO(3): R^3 (x)_R G2: R^7"]
    for text in texts:
        a = build_action(parse_rep(text))
        rep = G.analyze(a)
        print(f"{text}:")
        print(f"  cohomogeneity {rep.cohomogeneity}, "
              f"polar: {rep.polar}, boundary: {rep.boundary}")
        print(f"  orbit dim {rep.orbit_dim} + cohom = dim V = {a.dim_V}")

    print("\ninvolution audit for SO(3) on R^7:")
    a = build_action(parse_rep("SO(3): R^7"))
    audit = G.involution_audit(a, G.rotation_involution(a))
    print(f"  normalizes: {audit.normalizes}, fixed dim: {audit.f}, "
          f"centralizer dim: {audit.dim_C}, "
          f"formula holds: {audit.formula_holds}")


if __name__ == "__main__":
    main()
