"""Geometric invariants of an orthogonal action given by generator matrices.

All computations are exact: sample points have small integer coordinates
drawn from a seeded generator, and every rank/kernel is computed with
fraction-free elimination, so genericity over several independent samples
is the only probabilistic ingredient (agreement across samples is
required, and a wrong answer would need a measure-zero coincidence per
sample).

Every inner product goes through the invariant form carried by the
action (``gram``), never the raw dot product.
"""

import random
from dataclasses import dataclass
from fractions import Fraction

import numpy

from .linalg import (
    ONE,
    ZERO,
    IncrementalKernel,
    SpMat,
    dot,
    gram_dot,
    invert,
    is_zero_vec,
    kron,
    nullspace,
    rank,
    row_space_contains,
    unit_vector,
)
from .irrepmeta import COMPLEX, REAL, fs_type, weight_multiplicities
from .matrep import Circle, Leaf, LieAction, TensorC, TorusRep, build_action
from .rootsys import build_root_system

BOUNDARY_YES = "yes"
BOUNDARY_NO = "certified-no"
BOUNDARY_UNKNOWN = "unknown"

DEFAULT_SEED = 17
DEFAULT_SAMPLES = 3


@dataclass
class AnalysisReport:
    """Computed invariants of one action."""
    cohomogeneity: int
    orbit_dim: int
    principal_isotropy_dim: int
    polar: bool
    copolarity_upper: object          # int or None (= undetermined)
    boundary: str                     # one of the BOUNDARY_* constants
    boundary_witness: object = None
    sample_seed: int = DEFAULT_SEED


@dataclass
class SliceData:
    """Isotropy and normal-space data at one point."""
    base_point: list
    isotropy_coeffs: list             # coefficient vectors over the generators
    isotropy_mats: list               # the same elements as matrices
    normal_space: list                # basis vectors of the normal space
    orbit_dim: int


def _sample_vector(rng, dim):
    return [Fraction(rng.randint(-9, 9)) for _ in range(dim)]


def _rng(seed, tag):
    return random.Random(f"{seed}:{tag}")


def _orbit_rows(a: LieAction, v):
    return [X.apply(v) for X in a.generators]


def orbit_dim_at(a: LieAction, v) -> int:
    return rank(_orbit_rows(a, v))


def cohomogeneity(a: LieAction, seed=DEFAULT_SEED,
                  samples=DEFAULT_SAMPLES) -> int:
    """dim V minus the generic orbit dimension (minimum over samples)."""
    rng = _rng(seed, "cohom")
    best = 0
    for _ in range(max(samples, 1)):
        v = _sample_vector(rng, a.dim_V)
        best = max(best, orbit_dim_at(a, v))
        if best == min(a.dim_V, a.group_dim):
            break
    return a.dim_V - best


def _combine(generators, coeffs):
    out = SpMat(generators[0].nrows, generators[0].ncols)
    for c, X in zip(coeffs, generators):
        if c:
            out = out + X.scale(c)
    return out


def slice_at(a: LieAction, v) -> SliceData:
    """Isotropy algebra and normal space at the point v."""
    rows = _orbit_rows(a, v)
    odim = rank(rows)
    cols = [[rows[i][j] for i in range(a.group_dim)] for j in range(a.dim_V)]
    iso_coeffs = nullspace(cols, ncols=a.group_dim)
    iso_mats = [_combine(a.generators, c) for c in iso_coeffs]
    normal_rows = [a.gram.apply(r) for r in rows]
    normal = nullspace(normal_rows, ncols=a.dim_V)
    return SliceData(base_point=v, isotropy_coeffs=iso_coeffs,
                     isotropy_mats=iso_mats, normal_space=normal,
                     orbit_dim=odim)


def principal_isotropy(a: LieAction, seed=DEFAULT_SEED,
                       samples=DEFAULT_SAMPLES) -> SliceData:
    """Slice data at a generic point (the sample with the largest orbit)."""
    rng = _rng(seed, "cohom")   # same stream as cohomogeneity, by design
    best_v, best_dim = None, -1
    for _ in range(max(samples, 1)):
        v = _sample_vector(rng, a.dim_V)
        d = orbit_dim_at(a, v)
        if d > best_dim:
            best_v, best_dim = v, d
        if best_dim == min(a.dim_V, a.group_dim):
            break
    return slice_at(a, best_v)


def is_polar(a: LieAction, seed=DEFAULT_SEED) -> bool:
    """True iff the normal space at a generic point meets every orbit
    orthogonally: <X u, w> = 0 for all generators X and normal u, w."""
    sd = principal_isotropy(a, seed)
    n = sd.normal_space
    for X in a.generators:
        imgs = [X.apply(u) for u in n]
        for img in imgs:
            gi = a.gram.apply(img)
            for w in n:
                if dot(gi, w):
                    return False
    return True


# ---------------------------------------------------------------------------
# subspace restriction
# ---------------------------------------------------------------------------

class Subspace:
    """A subspace with a basis, supporting exact coordinates and
    restriction of invariant operators."""

    def __init__(self, basis, gram):
        self.basis = basis
        self.dim = len(basis)
        self.ambient_gram = gram
        g = [[gram_dot(u, gram, w) for w in basis] for u in basis]
        self.gram_mat = g
        self._ginv = invert(g) if basis else []

    def _project(self, v):
        rhs = [gram_dot(u, self.ambient_gram, v) for u in self.basis]
        x = [sum(self._ginv[i][j] * rhs[j] for j in range(self.dim))
             for i in range(self.dim)]
        rec = [ZERO] * len(v)
        for xi, u in zip(x, self.basis):
            if xi:
                rec = [r + xi * b for r, b in zip(rec, u)]
        return x, rec

    def coords(self, v):
        """Coordinates of v in the basis; v must lie in the subspace."""
        x, rec = self._project(v)
        # exactness check: reject vectors outside the subspace
        assert rec == list(v), "vector not in subspace"
        return x

    def residual(self, v):
        """v minus its orthogonal projection onto the subspace."""
        _, rec = self._project(v)
        return [a - b for a, b in zip(v, rec)]

    def restrict(self, mat: SpMat) -> SpMat:
        """Matrix of an invariant operator in the subspace basis."""
        out = SpMat(self.dim, self.dim)
        for j, u in enumerate(self.basis):
            img = mat.apply(u)
            if is_zero_vec(img):
                continue
            for i, c in enumerate(self.coords(img)):
                if c:
                    out[(i, j)] = c
        return out

    def gram_sp(self) -> SpMat:
        out = SpMat(self.dim, self.dim)
        for i in range(self.dim):
            for j in range(self.dim):
                if self.gram_mat[i][j]:
                    out[(i, j)] = self.gram_mat[i][j]
        return out


def _vec_mat(m: SpMat, support):
    return [m[ij] for ij in support]


def _independent_subset(mats):
    """A maximal linearly independent subset of a list of matrices."""
    support = sorted(set().union(*(set(m.data) for m in mats))) if mats else []
    kept = []
    ker = IncrementalKernel(len(support))
    for m in mats:
        if m.is_zero():
            continue
        if ker.add(_vec_mat(m, support)):
            kept.append(m)
    return kept


def _stabilizer_coeffs(generators, sub: Subspace):
    """Coefficient basis of {X in the span : X maps the subspace into
    itself}.

    For the fixed space of the isotropy algebra k at a generic point this
    stabilizer coincides with the normalizer of k: for X preserving the
    fixed space and Y in k, [X, Y] kills the (generic) base point, hence
    lies in k."""
    g = len(generators)
    residuals = []           # per basis vector: residual of each X_i image
    for b in sub.basis:
        imgs = [X.apply(b) for X in generators]
        res = [sub.residual(img) for img in imgs]
        residuals.append(res)
    ker = IncrementalKernel(g)
    for res in residuals:
        n = len(res[0]) if res else 0
        for comp in range(n):
            row = [res[i][comp] for i in range(g)]
            if any(row):
                ker.add(row)
    return ker.kernel()


def _mat_rows(m: SpMat, dim):
    by_row = {}
    for (i, j), v in m.data.items():
        by_row.setdefault(i, [ZERO] * dim)[j] = v
    return list(by_row.values())


def _common_kernel(mats, dim):
    """Common kernel of a list of operators, grown incrementally: new
    operators only trigger recomputation when they act nontrivially on
    the kernel found so far."""
    basis = [unit_vector(dim, i) for i in range(dim)]
    rows = []
    for m in mats:
        if all(is_zero_vec(m.apply(b)) for b in basis):
            continue
        rows.extend(_mat_rows(m, dim))
        basis = nullspace(rows, ncols=dim)
        if not basis:
            break
    return basis


def copolarity_upper_bound(a: LieAction, seed=DEFAULT_SEED):
    """Upper bound for the copolarity via iterated reduction to the fixed
    space of the principal isotropy algebra.

    Returns 0 for polar actions; the dimension of the reduced group when
    the principal isotropy algebra is nontrivial; None (undetermined)
    when it is trivial but the action is not polar.
    """
    if is_polar(a, seed):
        return 0
    gens, gram, dim = a.generators, a.gram, a.dim_V
    first = True
    while True:
        rng = _rng(seed, f"copol{dim}")
        best = None
        for _ in range(DEFAULT_SAMPLES):
            v = _sample_vector(rng, dim)
            d = rank([X.apply(v) for X in gens])
            if best is None or d > best[1]:
                best = (v, d)
        v, _ = best
        cols = [[X.apply(v)[j] for X in gens] for j in range(dim)]
        iso = nullspace(cols, ncols=len(gens))
        iso_mats = [_combine(gens, c) for c in iso]
        if not iso_mats:
            if first:
                return None
            return len(gens)
        first = False
        fixed = _common_kernel(iso_mats, dim)
        sub = Subspace(fixed, gram)
        ncoeffs = _stabilizer_coeffs(gens, sub)
        restricted = [sub.restrict(_combine(gens, c)) for c in ncoeffs]
        gens = _independent_subset(restricted)
        gram = sub.gram_sp()
        dim = sub.dim
        if not gens:
            return 0


# ---------------------------------------------------------------------------
# identity checks for sums and tensor products
# ---------------------------------------------------------------------------

def slice_cohomogeneity_check(a: LieAction, seed=DEFAULT_SEED) -> bool:
    """For a two-summand action, check that the total cohomogeneity equals
    the first summand's plus that of the isotropy action on the second."""
    assert a.factors and a.factors[0] == "Sum", "not a direct-sum action"
    _, a1, a2 = a.factors
    lhs = cohomogeneity(a, seed)
    sd = principal_isotropy(a1, seed)
    iso2 = [_combine(a2.generators, c) for c in sd.isotropy_coeffs]
    rng = _rng(seed, "slicesum")
    best = 0
    for _ in range(DEFAULT_SAMPLES):
        v2 = _sample_vector(rng, a2.dim_V)
        best = max(best, rank([K.apply(v2) for K in iso2]) if iso2 else 0)
    rhs = cohomogeneity(a1, seed) + (a2.dim_V - best)
    return lhs == rhs


def product_slice_check(a: LieAction, seed=DEFAULT_SEED) -> bool:
    """For a tensor product over R of two cohomogeneity-one actions, check
    the slice identity c = c(H on v1-perp (x) v2-perp) + c1 + c2 - 1 at a
    pure tensor of regular vectors."""
    assert a.factors and a.factors[0] == "R", "not a real tensor action"
    _, a1, a2 = a.factors
    c1 = cohomogeneity(a1, seed)
    c2 = cohomogeneity(a2, seed)
    if c1 != 1 or c2 != 1:
        raise ValueError("factors must have cohomogeneity 1")
    lhs = cohomogeneity(a, seed)
    sd1 = principal_isotropy(a1, seed)
    sd2 = principal_isotropy(a2, seed)
    v1, v2 = sd1.base_point, sd2.base_point
    perp1 = nullspace([a1.gram.apply(v1)], ncols=a1.dim_V)
    perp2 = nullspace([a2.gram.apply(v2)], ncols=a2.dim_V)
    s1 = Subspace(perp1, a1.gram)
    s2 = Subspace(perp2, a2.gram)
    k1 = [s1.restrict(K) for K in sd1.isotropy_mats]
    k2 = [s2.restrict(K) for K in sd2.isotropy_mats]
    d1, d2 = s1.dim, s2.dim
    gens = [kron(K, SpMat.eye(d2)) for K in k1]
    gens += [kron(SpMat.eye(d1), K) for K in k2]
    rng = _rng(seed, "prodslice")
    best = 0
    for _ in range(DEFAULT_SAMPLES):
        w = _sample_vector(rng, d1 * d2)
        best = max(best, rank([X.apply(w) for X in gens]) if gens else 0)
    c_h = d1 * d2 - best
    return lhs == c_h + c1 + c2 - 1


# ---------------------------------------------------------------------------
# boundary of the orbit space
# ---------------------------------------------------------------------------

_FLOAT_CACHE = {}


def _float_data(a: LieAction):
    key = id(a)
    if key not in _FLOAT_CACHE:
        gens = numpy.array([[[float(X[(i, j)]) for j in range(a.dim_V)]
                             for i in range(a.dim_V)] for X in a.generators])
        gram = numpy.array([[float(a.gram[(i, j)]) for j in range(a.dim_V)]
                            for i in range(a.dim_V)])
        _FLOAT_CACHE[key] = (gens, gram)
    return _FLOAT_CACHE[key]


def _float_nullspace(m, tol=1e-8):
    """Orthonormal kernel basis (columns) of a float matrix."""
    if m.shape[0] == 0:
        return numpy.eye(m.shape[1])
    _, s, vh = numpy.linalg.svd(m)
    cut = tol * max(1.0, s[0] if len(s) else 0.0)
    nz = int((s > cut).sum())
    return vh[nz:].T


def _codim1_float(a: LieAction, p, seed) -> bool:
    """Floating-point version of the codimension-1 stratum test, used to
    discard hopeless candidate points quickly; positives are always
    re-verified exactly."""
    gens, gram = _float_data(a)
    v = numpy.array([float(x) for x in p])
    imgs = gens @ v                          # g x d
    iso = _float_nullspace(imgs.T)           # coefficients, g x k
    if iso.shape[1] == 0:
        return False
    kmats = numpy.tensordot(iso.T, gens, axes=(1, 0))   # k x d x d
    normal = _float_nullspace(imgs @ gram)   # d x nN
    kn = numpy.array([normal.T @ K @ normal for K in kmats])
    fixed = _float_nullspace(kn.reshape(-1, normal.shape[1]))
    gn = normal.T @ gram @ normal
    moving = _float_nullspace(fixed.T @ gn)
    dw = moving.shape[1]
    if dw == 0:
        return False
    km = numpy.array([moving.T @ K @ moving for K in kn])
    rng = numpy.random.default_rng(abs(hash((seed, "codim1f"))) % (2 ** 32))
    best = 0
    for _ in range(3):
        w = rng.standard_normal(dw)
        best = max(best, numpy.linalg.matrix_rank(
            numpy.array([K @ w for K in km])))
    return dw - best == 1


def _codim1_stratum_at(a: LieAction, p, seed) -> bool:
    """True if the slice at p exhibits a codimension-1 stratum: the
    isotropy algebra acts with cohomogeneity 1 on the moving part of the
    normal space.  A float prefilter discards most candidates; any hit
    is confirmed in exact arithmetic below."""
    if is_zero_vec(p):
        return False
    if not _codim1_float(a, p, seed):
        return False
    sd = slice_at(a, p)
    if not sd.isotropy_mats:
        return False
    normal = Subspace(sd.normal_space, a.gram)
    kmats = [normal.restrict(K) for K in sd.isotropy_mats]
    fixed = _common_kernel(kmats, normal.dim)
    # moving part: orthogonal complement of the fixed part inside the normal
    if fixed:
        gsp = normal.gram_sp()
        wrows = [gsp.apply(f) for f in fixed]
        moving = nullspace(wrows, ncols=normal.dim)
    else:
        moving = [unit_vector(normal.dim, i) for i in range(normal.dim)]
    if not moving:
        return False
    msub = Subspace(moving, normal.gram_sp())
    mmats = [msub.restrict(K) for K in kmats]
    rng = _rng(seed, "codim1")
    best = 0
    for _ in range(DEFAULT_SAMPLES):
        w = _sample_vector(rng, msub.dim)
        best = max(best, rank([K.apply(w) for K in mmats]))
    return msub.dim - best == 1


def _candidate_points(a: LieAction, seed):
    """Candidate singular points: coordinate (weight) vectors, two-term
    combinations within weight pairs, and pure tensors built from the
    factors' distinguished vectors."""
    seen = set()

    def emit(v):
        key = tuple(v)
        if key not in seen and not is_zero_vec(v):
            seen.add(key)
            yield list(v)

    d = a.dim_V
    for i in range(d):
        yield from emit(unit_vector(d, i))
    if a.factors and a.factors[0] in ("R", "C", "H") and a.embed:
        _, a1, a2 = a.factors
        rng = _rng(seed, "cand")
        picks1 = [unit_vector(a1.dim_V, 0), _sample_vector(rng, a1.dim_V)]
        picks2 = [unit_vector(a2.dim_V, 0), _sample_vector(rng, a2.dim_V)]
        for v1 in picks1:
            for v2 in picks2:
                yield from emit(a.embed(v1, v2))
        # sums of pure tensors in "diagonal" position (low-rank points)
        k1 = min(a1.dim_V, 3)
        k2 = min(a2.dim_V, 3)
        units1 = [unit_vector(a1.dim_V, i) for i in range(k1)]
        units2 = [unit_vector(a2.dim_V, i) for i in range(k2)]
        for i1 in range(k1):
            for j1 in range(k2):
                for i2 in range(i1 + 1, k1):
                    for j2 in range(k2):
                        if j2 == j1:
                            continue
                        t1 = a.embed(units1[i1], units2[j1])
                        t2 = a.embed(units1[i2], units2[j2])
                        yield from emit([p + q for p, q in zip(t1, t2)])
                        yield from emit([p - q for p, q in zip(t1, t2)])
    keys = a.weight_keys
    if keys:
        groups = {}
        for i, k in enumerate(keys):
            groups.setdefault(k, []).append(i)
        for k, idxs in groups.items():
            for x in range(len(idxs)):
                for y in range(x + 1, len(idxs)):
                    u = unit_vector(d, idxs[x])
                    w = unit_vector(d, idxs[y])
                    yield from emit([p + q for p, q in zip(u, w)])
                    yield from emit([p - q for p, q in zip(u, w)])
        for k, idxs in groups.items():
            nk = tuple(-x for x in k)
            if nk in groups and nk > k:
                for x in idxs[:2]:
                    for y in groups[nk][:2]:
                        u = unit_vector(d, x)
                        w = unit_vector(d, y)
                        yield from emit([p + q for p, q in zip(u, w)])
                        yield from emit([p - q for p, q in zip(u, w)])
    # all remaining two-coordinate combinations
    for i in range(d):
        for j in range(i + 1, d):
            u = unit_vector(d, i)
            w = unit_vector(d, j)
            yield from emit([p + q for p, q in zip(u, w)])
            yield from emit([p - q for p, q in zip(u, w)])


def boundary_witness_search(a: LieAction, seed=DEFAULT_SEED):
    """Scan candidate singular points for a codimension-1 stratum.

    Returns (BOUNDARY_YES, point) on success, (BOUNDARY_UNKNOWN, None)
    otherwise; a positive answer is a proof, a negative one is not.
    """
    for p in _candidate_points(a, seed):
        if _codim1_stratum_at(a, p, seed):
            return BOUNDARY_YES, p
    return BOUNDARY_UNKNOWN, None


# -- no-boundary certificates ------------------------------------------------

def _torus_no_boundary(characters):
    """Certificate for a torus acting on C^m by the given characters.

    Codimension-1 strata can only come from circle subgroups fixing a
    subspace of complex codimension exactly 1 (strata of finite isotropy
    have even codimension, and higher tori are excluded as sphere
    isotropy groups), so it suffices that every candidate circle leaves
    at least two characters nonvanishing.
    """
    k = len(characters[0])
    m = len(characters)
    if rank([list(w) for w in characters]) < k or m < 2:
        return BOUNDARY_NO if k == 0 else BOUNDARY_UNKNOWN
    for i in range(m):
        others = [list(w) for j, w in enumerate(characters) if j != i]
        kerbasis = nullspace(others, ncols=k)
        for v in kerbasis:
            if dot(list(map(Fraction, characters[i])), v):
                return BOUNDARY_UNKNOWN
    return BOUNDARY_NO


def _rank1_weight_data(e):
    """Weight functionals (over the acting torus) and real multiplicities
    for a rank-1 simple leaf, optionally extended by a central circle.

    Returns (torus_rank, root_functionals, weight_list, per_weight_real_mult)
    where weight_list pairs each functional with the real dimension its
    vanishing contributes to a fixed space.
    """
    circle_charge = None
    if isinstance(e, TensorC) and isinstance(e.right, Circle) \
            and isinstance(e.left, Leaf):
        circle_charge = e.right.charge
        e = e.left
    if not isinstance(e, Leaf) or e.type.rank != 1:
        return None
    rs = build_root_system(e.type)
    ft = fs_type(rs, e.weight)
    mults = weight_multiplicities(rs, e.weight)
    realified = ft != REAL or circle_charge is not None
    tr = 1 + (1 if circle_charge is not None else 0)
    root = (2,) + ((0,) if circle_charge is not None else ())
    weights = []
    for mu, m in mults.items():
        func = (mu[0],) + ((circle_charge,) if circle_charge is not None
                           else ())
        weights.append((func, (2 if realified else 1) * m))
    return tr, [root], weights, e


def _line_classes(funcs, tr):
    """Representative lines in R^tr, one per vanishing pattern."""
    if tr == 1:
        return [[ONE]]
    classes = []
    seen = set()
    for f in funcs:
        if not any(f):
            continue
        line = nullspace([list(map(Fraction, f))], ncols=tr)
        if len(line) != tr - 1:
            continue
        # for tr = 2 the kernel is a genuine line
        v = line[0]
        key = tuple(v)
        if key not in seen:
            seen.add(key)
            classes.append(v)
    # a generic line on which nothing vanishes
    classes.append(None)
    return classes


def _connected_rank_small_no_boundary(a: LieAction):
    data = _rank1_weight_data(a.expr)
    if data is None:
        return BOUNDARY_UNKNOWN
    tr, roots, weights, leaf = data
    g = a.group_dim
    dv = a.dim_V
    # principal isotropy algebra must be trivial for the stratum count
    sd = principal_isotropy(a)
    if sd.isotropy_coeffs:
        return BOUNDARY_UNKNOWN
    # sphere isotropy S^3 needs a nonzero vector fixed by the simple
    # factor (its only 3-dimensional subalgebra is itself); a nontrivial
    # irreducible module has none, so only circle isotropy remains.
    if all(x == 0 for x in leaf.weight):
        return BOUNDARY_UNKNOWN
    funcs = [f for f, _ in weights] + roots
    if tr == 1:
        lines = [[ONE]]
    else:
        lines = _line_classes(funcs, tr)
    for line in lines:
        if line is None:
            f_l = 0
            n_l = tr
        else:
            f_l = sum(m for func, m in weights
                      if not dot(list(map(Fraction, func)), line))
            n_l = tr + sum(2 for r in roots
                           if not dot(list(map(Fraction, r)), line))
        if f_l == dv - 2 - g + n_l:
            return BOUNDARY_UNKNOWN
    return BOUNDARY_NO


def no_boundary_certificate(a: LieAction):
    """Prove that the orbit space has empty boundary, when possible.

    Supports torus actions and rank-1 simple groups (optionally extended
    by a central circle); everything else is Inconclusive.
    """
    e = a.expr
    if isinstance(e, TorusRep):
        return _torus_no_boundary(e.characters)
    if isinstance(e, Circle):
        return _torus_no_boundary(((e.charge,),))
    return _connected_rank_small_no_boundary(a)


# ---------------------------------------------------------------------------
# involutions
# ---------------------------------------------------------------------------

@dataclass
class InvolutionAudit:
    normalizes: bool
    f: int
    dim_C: int
    formula_holds: bool


def involution_audit(a: LieAction, w: SpMat) -> InvolutionAudit:
    """Audit an orthogonal involution against the fixed-set dimension
    formula f = dim V - dim G + dim C - 1."""
    d = a.dim_V
    assert (w * w) == SpMat.eye(d), "matrix is not an involution"
    assert (w.transpose() * (a.gram * w)) == a.gram, \
        "involution is not orthogonal for the invariant form"
    support = sorted(set().union(*(set(X.data) for X in a.generators)))
    gen_rows = [_vec_mat(X, support) for X in a.generators]
    normalizes = True
    conj = []
    for X in a.generators:
        Y = w * (X * w)
        conj.append(Y)
        extra = set(Y.data) - set(support)
        if extra or not row_space_contains(gen_rows, _vec_mat(Y, support)):
            normalizes = False
    diff = w - SpMat.eye(d)
    rows = []
    by_row = {}
    for (i, j), v in diff.data.items():
        by_row.setdefault(i, [ZERO] * d)[j] = v
    rows = list(by_row.values())
    f = d - rank(rows) if rows else d
    if normalizes:
        g = a.group_dim
        cols = []
        sup2 = sorted(set(support).union(*(set(Y.data) for Y in conj)))
        mat = [[(conj[i][ij] - a.generators[i][ij]) for i in range(g)]
               for ij in sup2]
        cent = nullspace(mat, ncols=g)
        dim_c = len(cent)
    else:
        dim_c = 0
    holds = normalizes and (f == d - a.group_dim + dim_c - 1)
    return InvolutionAudit(normalizes=normalizes, f=f, dim_C=dim_c,
                           formula_holds=holds)


def rotation_involution(a: LieAction) -> SpMat:
    """-(image of the half-turn) for an odd orthogonal rank-1 real form.

    In the weight basis a half-turn of the circle acts on the weight-m
    line by (-1)^(m/2); the real-form basis is graded by |m|, so the
    image is diagonal there.  Returns the negated image, an orthogonal
    involution lying outside the image of the connected group when the
    module dimension is 4k+-1 appropriately.
    """
    d = a.dim_V
    out = SpMat(d, d)
    for i, key in enumerate(a.weight_keys):
        m = key[0]
        assert m % 2 == 0, "not an odd orthogonal module"
        out[(i, i)] = Fraction(-((-1) ** ((m // 2) % 2)))
    return out


# ---------------------------------------------------------------------------
# full analysis
# ---------------------------------------------------------------------------

def analyze(a: LieAction, seed=DEFAULT_SEED) -> AnalysisReport:
    """Compute the full invariant record of an action.

    Boundary logic, in order: a certificate of absence; an explicit
    codimension-1 witness; or the reduction argument (a strict reduction
    of the quotient forces boundary, and both a section of a polar
    action and the fixed space of a nontrivial principal isotropy
    algebra are strict reductions)."""
    sd = principal_isotropy(a, seed)
    odim = sd.orbit_dim
    c = a.dim_V - odim
    polar = is_polar(a, seed)
    copol = copolarity_upper_bound(a, seed)
    boundary = no_boundary_certificate(a)
    witness = None
    if boundary != BOUNDARY_NO:
        if odim > 0 and (polar or sd.isotropy_coeffs):
            boundary = BOUNDARY_YES
        else:
            boundary, witness = boundary_witness_search(a, seed)
    return AnalysisReport(cohomogeneity=c, orbit_dim=odim,
                          principal_isotropy_dim=len(sd.isotropy_coeffs),
                          polar=polar, copolarity_upper=copol,
                          boundary=boundary, boundary_witness=witness,
                          sample_seed=seed)
