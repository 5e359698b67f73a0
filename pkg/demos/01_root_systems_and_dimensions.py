"""Root systems and dimension formulas.

Builds the classical and exceptional root systems, prints Weyl
dimensions of a few familiar modules, and enumerates all dominant
weights below a dimension bound.
"""
from repgeom.rootsys import (SimpleType, build_root_system, weyl_dim,
                             dominant_weights_up_to_dim)
from repgeom.irrepmeta import fs_type, real_dim


def main():
    print("== group dimensions ==")
    for t in [SimpleType("A", 2), SimpleType("B", 3), SimpleType("C", 3),
              SimpleType("D", 4), SimpleType("G", 2), SimpleType("F", 4),
              SimpleType("E", 8)]:
        rs = build_root_system(t)
        print(f"  {t.family}{t.rank}: dim G = {rs.group_dim}, "
              f"{rs.n_positive} positive roots")

    print("\n== familiar modules ==")
    samples = [
        (SimpleType("A", 1), (3,), "SU(2) on C^4"),
        (SimpleType("A", 5), (0, 1, 0, 0, 0), "SU(6) on Lambda^2 C^6"),
        (SimpleType("B", 3), (0, 0, 1), "Spin(7) on R^8"),
        (SimpleType("E", 6), (1, 0, 0, 0, 0, 0), "E6 on C^27"),
    ]
    for t, w, name in samples:
        rs = build_root_system(t)
        print(f"  {name}: dim_C = {weyl_dim(rs, w)}, "
              f"type {fs_type(rs, w)}, dim_R = {real_dim(rs, w)}")

    print("\n== all G2 modules of dimension <= 100 ==")
    rs = build_root_system(SimpleType("G", 2))
    for w in sorted(dominant_weights_up_to_dim(rs, 100)):
        print(f"  hw{list(w)}: dim {weyl_dim(rs, w)}")


if __name__ == "__main__":
    main()
