"""Metadata of irreducible representations: weight multiplicities,
Frobenius-Schur type and real dimension.

Multiplicities come from the Freudenthal recursion, done level by level in
exact rational arithmetic.  The Frobenius-Schur type is decided by the
classical criterion: the representation is complex unless its highest
weight is fixed by minus the longest Weyl element, and a self-dual
representation is quaternionic exactly when the pairing of the highest
weight with the sum of the positive coroots is odd.  The matrix-level
invariant-form computation in :mod:`repgeom.matrep` serves as an
independent cross-check in the tests.
"""

from fractions import Fraction

from .rootsys import RootSystemData, is_dominant, longest_element_dual, weyl_dim

REAL = "R"
COMPLEX = "C"
QUATERNIONIC = "H"


def weight_multiplicities(rs: RootSystemData, lam):
    """All weights of the irrep with highest weight ``lam``.

    Returns a dict mapping Dynkin-label tuples to positive integer
    multiplicities.  Weights are generated downward from the highest
    weight; each candidate's multiplicity is computed by the Freudenthal
    recursion, and candidates with multiplicity zero are discarded.
    """
    lam = tuple(lam)
    if not is_dominant(lam):
        raise ValueError(f"weight {lam} is not dominant")
    n = rs.rank
    root_labs = [rs.root_labels(r) for r in rs.positive_roots]
    simple_labs = [rs.root_labels(tuple(1 if j == i else 0 for j in range(n)))
                   for i in range(n)]
    lam_rho = tuple(a + 1 for a in lam)
    c_top = rs.ip(lam_rho, lam_rho)
    mult = {lam: 1}
    frontier = [lam]
    while frontier:
        candidates = set()
        for mu in frontier:
            for sl in simple_labs:
                candidates.add(tuple(a - b for a, b in zip(mu, sl)))
        new = []
        for mu in sorted(candidates):
            if mu in mult:
                continue
            rhs = Fraction(0)
            for rl in root_labs:
                k = 1
                while True:
                    up = tuple(a + k * b for a, b in zip(mu, rl))
                    m_up = mult.get(up)
                    if m_up is None:
                        # weights above mu are already known; a miss means
                        # mu + k a is not a weight and the string ends
                        break
                    rhs += m_up * rs.ip(up, rl)
                    k += 1
            mu_rho = tuple(a + 1 for a in mu)
            denom = c_top - rs.ip(mu_rho, mu_rho)
            if not rhs:
                continue
            m = 2 * rhs / denom
            assert m.denominator == 1 and m > 0
            mult[mu] = int(m)
            new.append(mu)
        frontier = new
    assert sum(mult.values()) == weyl_dim(rs, lam)
    return mult


def zero_weight_dim(rs: RootSystemData, lam) -> int:
    """Multiplicity of the zero weight (dimension of the torus-fixed space)."""
    zero = tuple([0] * rs.rank)
    return weight_multiplicities(rs, lam).get(zero, 0)


def fs_type(rs: RootSystemData, lam) -> str:
    """Frobenius-Schur type of the irrep: "R", "C" or "H"."""
    lam = tuple(lam)
    if longest_element_dual(rs, lam) != lam:
        return COMPLEX
    # self-dual: quaternionic iff <lam, 2 rho^vee> is odd
    s = Fraction(0)
    for root in rs.positive_roots:
        s += rs.pairing(lam, root)
    assert s.denominator == 1
    return QUATERNIONIC if int(s) % 2 else REAL


def product_fs_type(types) -> str:
    """Frobenius-Schur type of an (outer) tensor product of irreps.

    The product is complex when any factor is; a self-dual product is
    quaternionic exactly when an odd number of factors are.
    """
    if COMPLEX in types:
        return COMPLEX
    n_h = sum(1 for t in types if t == QUATERNIONIC)
    return QUATERNIONIC if n_h % 2 else REAL


def real_dim(rs: RootSystemData, lam) -> int:
    """Dimension over R of the underlying real irreducible module."""
    d = weyl_dim(rs, lam)
    return d if fs_type(rs, lam) == REAL else 2 * d
