"""The model reduction: a maximal torus of SU(k+1) acting on C^(k+1).

The k-torus acts on C^(k+1) by the k+1 coordinate characters of the
diagonal maximal torus of SU(k+1): the weights e_1, ..., e_k and
-(e_1 + ... + e_k).  Its quotient has cohomogeneity k+2, carries no
boundary, and the k+1 weight lines are equiangular for the natural
invariant metric, with symmetry group the full symmetric group on the
weights.
"""

from fractions import Fraction

from . import geometry
from .matrep import TorusRep, build_action

BOUNDARY_NO = geometry.BOUNDARY_NO


def su_torus_weights(k):
    """The k+1 characters of the maximal k-torus of SU(k+1) on C^(k+1)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    chars = []
    for i in range(k):
        chars.append(tuple(1 if j == i else 0 for j in range(k)))
    chars.append(tuple([-1] * k))
    return tuple(chars)


def torus_action(k):
    """The realified action of the k-torus on C^(k+1)."""
    return build_action(TorusRep(su_torus_weights(k)))


def character_gram(k):
    """Gram matrix of the k+1 characters for the metric in which the
    weights of the ambient SU(k+1) torus are orthonormal-simplex shaped.

    The characters are the restrictions of the k+1 coordinate weights
    e_i of U(k+1) to the trace-zero subspace; there <e_i, e_j> equals
    1 - 1/(k+1) on the diagonal and -1/(k+1) off it.
    """
    n = k + 1
    return [[Fraction(1) - Fraction(1, n) if i == j else -Fraction(1, n)
             for j in range(n)] for i in range(n)]


def verify_torus_case(k):
    """Check the model's invariants: cohomogeneity k+2, certified empty
    boundary, and exactly l = k+1 weights."""
    a = torus_action(k)
    chars = su_torus_weights(k)
    return {
        "cohom": geometry.cohomogeneity(a),
        "cohom_expected": k + 2,
        "no_boundary":
            geometry.no_boundary_certificate(a) == BOUNDARY_NO,
        "l_equals_k_plus_1": len(chars) == k + 1,
    }


def equiangular_symmetry_check(k):
    """The k+1 weight lines are pairwise equiangular and the symmetric
    group S_{k+1} permuting them acts by isometries of the weight space.

    Returns a record with the common angle cosine (squared, as an exact
    rational), the symmetry-group order verified, and a negative
    control: for k >= 2 the configuration is not an orthogonal frame.
    """
    chars = su_torus_weights(k)
    gram = character_gram(k)
    n = k + 1
    norms = [gram[i][i] for i in range(n)]
    assert len(set(norms)) == 1
    cos2 = None
    for i in range(n):
        for j in range(i + 1, n):
            c2 = gram[i][j] ** 2 / (norms[i] * norms[j])
            if cos2 is None:
                cos2 = c2
            elif c2 != cos2:
                return {"equiangular": False}
    # permuting the characters preserves all pairwise products, so every
    # permutation is induced by an isometry of the character span;
    # checking the adjacent transpositions suffices to generate S_{k+1}
    sym_ok = all(
        all(gram[p[i]][p[j]] == gram[i][j] for i in range(n) for j in range(n))
        for p in _transposition_generators(n))
    orthogonal_frame = cos2 == 0
    return {
        "equiangular": True,
        "cos_squared": cos2,
        "symmetric_group_acts": sym_ok,
        "orthogonal_frame": orthogonal_frame,
    }


def _transposition_generators(n):
    for i in range(n - 1):
        p = list(range(n))
        p[i], p[i + 1] = p[i + 1], p[i]
        yield p
