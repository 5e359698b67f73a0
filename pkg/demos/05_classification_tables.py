"""Reproducing the classification tables.

Enumerates all non-polar irreducible representations of cohomogeneity
4 and 5, annotates copolarity and boundary columns, and compares the
result against the embedded reference tables.  Expect a few minutes of
exact arithmetic.
"""
from repgeom import classify as C


def main():
    for target in (4, 5):
        rows = C.classify_tables(target)
        diff = C.compare_to_reference(rows, C.reference_table(target))
        print(f"== cohomogeneity {target}: {len(rows)} rows, "
              f"match = {diff['match']} ==")
        print(C.to_text(rows))


if __name__ == "__main__":
    main()
