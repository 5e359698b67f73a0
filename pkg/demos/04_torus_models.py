"""The maximal-torus model actions.

The k-torus of SU(k+1) acting on C^(k+1) has cohomogeneity k+2, a
certified boundaryless quotient, and equiangular weight lines permuted
by the full symmetric group.
"""
from repgeom.cases import (torus_action, su_torus_weights, verify_torus_case,
                           equiangular_symmetry_check)


def main():
    for k in range(1, 7):
        rec = verify_torus_case(k)
        geo = equiangular_symmetry_check(k)
        print(f"k = {k}: weights {list(su_torus_weights(k))}")
        print(f"  cohomogeneity {rec['cohom']} (expected {k + 2}), "
              f"boundaryless: {rec['no_boundary']}")
        if k >= 2:
            print(f"  equiangular: {geo['equiangular']}, "
                  f"cos^2 = {geo['cos_squared']}, "
                  f"S_{k + 1} acts by isometries: "
                  f"{geo['symmetric_group_acts']}")


if __name__ == "__main__":
    main()
