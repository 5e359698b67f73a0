"""Explicit matrix models over the rationals.

Constructs the real orthogonal action of a few representation
expressions and verifies, in exact arithmetic, that the generators are
skew with respect to the invariant inner product and close under the
bracket.
"""
from repgeom.cli import parse_rep, print_rep
from repgeom.matrep import build_action, quaternionic_structure
from repgeom.linalg import SpMat


def main():
    for text in ["SO(3): R^7", "SP(2): C^4", "SO(4): R^4",
                 "SO(3): R^3 (x)_R G2: R^7"]:
        e = parse_rep(text)
        a = build_action(e)
        a.check()
        skew = all(x.is_skew_wrt(a.gram) for x in a.generators)
        print(f"{text}  ->  {print_rep(e)}")
        print(f"  dim V = {a.dim_V}, dim G = {a.group_dim}, "
              f"generators skew: {skew}")

    print("\nquaternionic structure of SP(2) on C^4:")
    j = quaternionic_structure(parse_rep("SP(2): C^4"))
    print(f"  J^2 = -1: {(j * j + SpMat.eye(j.nrows)).is_zero()}")
    a = build_action(parse_rep("SP(2): C^4"))
    print(f"  J commutes with the action: "
          f"{all((x * j - j * x).is_zero() for x in a.generators)}")


if __name__ == "__main__":
    main()
