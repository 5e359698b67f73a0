"""Enumeration of irreducible orthogonal representations by cohomogeneity.

The pipeline sweeps simple groups (by highest weight, pruned with the
dimension bound dim V <= dim G + c), assembles product representations
from a finite factor pool (pruned by the same bound, by known polar
families, and by monotonicity of the cohomogeneity in vector-series
parameters), computes every surviving candidate's invariants exactly,
and checks the result against the embedded reference tables in
:mod:`repgeom._fixtures`.
"""

import csv
import io
import json
from dataclasses import dataclass, field, replace

from . import _fixtures
from .geometry import (BOUNDARY_NO, BOUNDARY_YES, DEFAULT_SEED, analyze,
                       cohomogeneity, is_polar)
from .irrepmeta import COMPLEX, QUATERNIONIC, REAL, fs_type, real_dim
from .matrep import (Leaf, TensorC, TensorH, TensorR, TorusRep, build_action,
                     with_circle)
from .rootsys import (SimpleType, build_root_system,
                      dominant_weights_up_to_dim, longest_element_dual,
                      weyl_dim)

PROV_COMPUTED = "Computed"
PROV_FIXTURE = "ReferenceFixture"


@dataclass
class ClassificationRow:
    """One classified representation with its computed invariants."""
    group_label: str
    rep_label: str
    rep_expr: object
    cohomogeneity: int
    polar: bool
    group_dim: int
    dim_V: int
    key: tuple                    # canonical identity, used for set checks
    copolarity: object = None     # int, "trivial", or None (undecided)
    boundary: object = None       # "yes", "no", or None (undecided)
    provenance: str = PROV_COMPUTED
    notes: str = ""
    report: object = field(default=None, repr=False, compare=False)


def _sort_key(row):
    return (row.group_dim, row.dim_V, row.group_label, row.rep_label)


# ---------------------------------------------------------------------------
# canonical weights: dual and diagram-automorphism normalization
# ---------------------------------------------------------------------------

def _alias_type(t, w):
    """Rewrite the low-rank coincidences C2 = B2 and D3 = A3."""
    if t.family == "C" and t.rank == 2:
        return SimpleType("B", 2), (w[1], w[0])
    if t.family == "D" and t.rank == 3:
        return SimpleType("A", 3), (w[1], w[0], w[2])
    return t, w


def _d4_normal(w):
    """Sort the three outer D4 labels (triality orbit representative)."""
    a, b, c = sorted((w[0], w[2], w[3]))
    return (a, w[1], b, c)


def canonical_weight(t, w):
    """Lex-minimal weight among dual and diagram-automorphism images.

    Two highest weights with the same canonical form give isomorphic
    orthogonal representations.
    """
    t, w = _alias_type(t, tuple(w))
    rs = build_root_system(t)
    cands = {w, longest_element_dual(rs, w)}
    if t.family == "D":
        if t.rank == 4:
            cands = {_d4_normal(x) for x in cands}
        else:
            cands |= {x[:-2] + (x[-1], x[-2]) for x in set(cands)}
    return t, min(cands)


def simple_key(t, w):
    t, w = canonical_weight(t, w)
    return ("leaf", t.family, t.rank, w)


def _adjoint_weight(t):
    rs = build_root_system(t)
    return tuple(rs.root_labels(rs.highest_root()))


def _fund_by_dim(t, d):
    """The fundamental weight of complex dimension d (canonicalized)."""
    rs = build_root_system(t)
    for i in range(t.rank):
        w = tuple(1 if j == i else 0 for j in range(t.rank))
        if weyl_dim(rs, w) == d:
            return canonical_weight(t, w)[1]
    raise ValueError(f"{t} has no fundamental module of dimension {d}")


# ---------------------------------------------------------------------------
# labels
# ---------------------------------------------------------------------------

def _fund_index(w):
    nz = [(i, x) for i, x in enumerate(w) if x]
    if len(nz) == 1 and nz[0][1] == 1:
        return nz[0][0]
    return None


def _generic_label(w):
    return "hw[" + ",".join(str(x) for x in w) + "]"


def _labels(t, w):
    """Human-readable (group, representation) labels for a canonical
    simple highest weight."""
    fam, r = t.family, t.rank
    rs = build_root_system(t)
    dim = weyl_dim(rs, w)
    ft = fs_type(rs, w)
    adj = _adjoint_weight(t)
    if fam == "A" and r == 1:
        k = w[0]
        if k % 2 == 0:
            return "SO3", {2: "R^3", 4: "S^2_0 R^3"}.get(k, f"R^{k + 1}")
        return "SU2", f"C^{k + 1}"
    if fam == "A":
        n = r + 1
        g = f"SU{n}"
        if w == adj:
            return g, "adjoint"
        for p in (w, longest_element_dual(rs, w)):
            i = _fund_index(p)
            if i is not None:
                k = min(i + 1, n - i - 1)
                if k == 1:
                    return g, f"C^{n}"
                lab = f"Lambda^{k} C^{n}"
                return g, f"[{lab}]_R" if ft == REAL else lab
            if sum(1 for x in p if x) == 1 and (p[0] == 2 or p[-1] == 2):
                return g, f"S^2 C^{n}"
        return g, _generic_label(w)
    if fam in ("B", "D"):
        n = 2 * r + (1 if fam == "B" else 0)
        if fam == "B" and r == 2 and w == (0, 1):
            return "SP2", "C^4"      # Spin5 = SP2
        if fam == "D" and r == 4:
            table = {(0, 0, 0, 1): ("SO8", "R^8"),
                     (0, 0, 0, 2): ("SO8", "S^2_0 R^8"),
                     (0, 1, 0, 0): ("SO8", "Lambda^2 R^8")}
            if w in table:
                return table[w]
            return "Spin8", _generic_label(w)
        spin_part = w[-1] if fam == "B" else w[-1] + w[-2]
        if spin_part % 2:
            g = f"Spin{n}"
            if _fund_index(w) in (r - 1, r - 2):
                return g, (f"R^{dim}" if ft == REAL else f"C^{dim}")
            return g, _generic_label(w)
        g = f"SO{n}"
        if w == adj:
            return g, f"Lambda^2 R^{n}"
        if _fund_index(w) == 0:
            return g, f"R^{n}"
        if w[0] == 2 and not any(w[1:]):
            return g, f"S^2_0 R^{n}"
        return g, _generic_label(w)
    if fam == "C":
        g = f"SP{r}"
        if w == adj:
            return g, f"[S^2 C^{2 * r}]_R"
        i = _fund_index(w)
        if i == 0:
            return g, f"C^{2 * r}"
        if i is not None:
            return g, f"[Lambda^{i + 1}_0 C^{2 * r}]_R"
        return g, _generic_label(w)
    g = f"{fam}{r}"
    if w == adj:
        return g, "adjoint"
    return g, (f"R^{dim}" if ft == REAL else f"C^{dim}")


def _circle_group_label(gl):
    """Group label after extending by a central circle."""
    if gl.startswith("SU"):
        return "U" + gl[2:]
    return gl + " x U1"


# ---------------------------------------------------------------------------
# cached engine calls
# ---------------------------------------------------------------------------

_COHOM_CACHE = {}
_POLAR_CACHE = {}
_ANALYZE_CACHE = {}


def _cohom(expr, seed):
    key = (expr, seed)
    if key not in _COHOM_CACHE:
        _COHOM_CACHE[key] = cohomogeneity(build_action(expr), seed)
    return _COHOM_CACHE[key]


def _polar(expr, seed):
    key = (expr, seed)
    if key not in _POLAR_CACHE:
        _POLAR_CACHE[key] = is_polar(build_action(expr), seed)
    return _POLAR_CACHE[key]


def _analysis(expr, seed):
    key = (expr, seed)
    if key not in _ANALYZE_CACHE:
        _ANALYZE_CACHE[key] = analyze(build_action(expr), seed)
    return _ANALYZE_CACHE[key]


# ---------------------------------------------------------------------------
# simple-group sweep
# ---------------------------------------------------------------------------

# The classical ranks cover the parameter ranges of the reference tables:
# SU n needs A ranks up to 16 (Lambda^2 C^17), SP n up to C9, SO n up to
# B8 (Lambda^2 R^17).  C2 and D3 are represented by their aliases B2, A3.
def _sweep_types():
    types = [SimpleType("A", n) for n in range(1, 17)]
    types += [SimpleType("B", n) for n in range(2, 9)]
    types += [SimpleType("C", n) for n in range(3, 10)]
    types += [SimpleType("D", n) for n in range(4, 9)]
    types += [SimpleType("G", 2), SimpleType("F", 4),
              SimpleType("E", 6), SimpleType("E", 7), SimpleType("E", 8)]
    return types


def _simple_row(t, w, seed, c_min, c_max):
    rs = build_root_system(t)
    rd = real_dim(rs, w)
    expr = Leaf(t, w)
    c = _cohom(expr, seed)
    if not c_min <= c <= c_max:
        return None
    gl, rl = _labels(t, w)
    return ClassificationRow(
        group_label=gl, rep_label=rl, rep_expr=expr,
        cohomogeneity=c, polar=_polar(expr, seed),
        group_dim=rs.group_dim, dim_V=rd, key=simple_key(t, w))


def enumerate_simple(c_min, c_max, seed=DEFAULT_SEED):
    """All irreducible representations of simple groups with exact
    cohomogeneity in [c_min, c_max], within the dimension bound
    dim V <= dim G + c_max."""
    if not 2 <= c_min <= c_max <= 8:
        raise ValueError("require 2 <= c_min <= c_max <= 8")
    rows = []
    seen = set()
    for t in _sweep_types():
        rs = build_root_system(t)
        bound = rs.group_dim + c_max
        for w in dominant_weights_up_to_dim(rs, bound):
            if not any(w):
                continue
            t2, w2 = canonical_weight(t, w)
            key = ("leaf", t2.family, t2.rank, w2)
            if key in seen:
                continue
            seen.add(key)
            if real_dim(rs, w2) > bound:
                continue
            row = _simple_row(t2, w2, seed, c_min, c_max)
            if row is not None:
                rows.append(row)
    return sorted(rows, key=_sort_key)


# ---------------------------------------------------------------------------
# factor pools for product representations
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class _Factor:
    expr: object
    glabel: str
    rlabel: str
    gdim: int
    rdim: int
    commutant: str                # "R", "C" or "H" (endomorphism algebra)
    vec: bool                     # defining (vector) module of its family
    key: tuple
    family: object = None         # stream tag for monotonicity pruning
    param: int = 0


def _leaf_factor(fam, rank, w, family=None, param=0):
    t = SimpleType(fam, rank)
    t, w = canonical_weight(t, w)
    rs = build_root_system(t)
    gl, rl = _labels(t, w)
    ft = fs_type(rs, w)
    vec = _fund_index(w) == 0 and fam in ("B", "C", "D") or \
        (fam == "A" and w in (tuple([1] + [0] * (rank - 1)),
                              tuple([0] * (rank - 1) + [1]))) or \
        (fam == "A" and rank == 1 and w == (2,)) or \
        (fam == "A" and rank == 3 and w == (0, 1, 0))
    return _Factor(expr=Leaf(t, w), glabel=gl, rlabel=rl,
                   gdim=rs.group_dim, rdim=real_dim(rs, w),
                   commutant=ft, vec=vec, key=simple_key(t, w),
                   family=family, param=param)


def _circle_factor(base, real_label=False):
    """Extend a complex- or quaternionic-type factor by a central circle."""
    rl = f"R^{base.rdim}" if real_label else base.rlabel
    return _Factor(expr=with_circle(base.expr),
                   glabel=_circle_group_label(base.glabel), rlabel=rl,
                   gdim=base.gdim + 1, rdim=base.rdim, commutant="C",
                   vec=False, key=("U", base.key),
                   family=base.family, param=base.param)


def _so_leaf(n, family=None):
    """The vector representation of SO(n), n >= 5."""
    if n == 6:
        f = _leaf_factor("A", 3, (0, 1, 0), family=family, param=n)
    elif n % 2:
        r = (n - 1) // 2
        f = _leaf_factor("B", r, tuple([1] + [0] * (r - 1)),
                         family=family, param=n)
    else:
        r = n // 2
        f = _leaf_factor("D", r, tuple([1] + [0] * (r - 1)),
                         family=family, param=n)
    # the D4 vector weight canonicalizes into the triality orbit slot,
    # so the flag cannot be read off the canonical weight
    return replace(f, vec=True, glabel=f"SO{n}", rlabel=f"R^{n}")


def _so4_factor():
    k = simple_key(SimpleType("A", 1), (1,))
    return _Factor(expr=TensorH(Leaf(SimpleType("A", 1), (1,)),
                                Leaf(SimpleType("A", 1), (1,))),
                   glabel="SO4", rlabel="R^4", gdim=6, rdim=4,
                   commutant="R", vec=True, key=("H", k, k))


def _so2_factor():
    return _Factor(expr=TorusRep(((1,),)), glabel="SO2", rlabel="R^2",
                   gdim=1, rdim=2, commutant="C", vec=True,
                   key=("torus", ((1,),)))


def _small_real_factors():
    """Real-irreducible actions of dimension 2..4 (left tensor factors)."""
    su2 = _leaf_factor("A", 1, (1,))
    return [
        _so2_factor(),
        _leaf_factor("A", 1, (2,)),                       # SO3 on R^3
        _so4_factor(),                                    # SO4 on R^4
        _circle_factor(su2, real_label=True),             # U2 on R^4
        replace(su2, rlabel="R^4", vec=False),            # SU2 on R^4
    ]


def _real_pool(c_target):
    """Second tensor factors for real products (ordered by dimension)."""
    pool = [
        _leaf_factor("A", 1, (4,)),                       # SO3 on R^5
        _leaf_factor("G", 2, (1, 0) if weyl_dim(
            build_root_system(SimpleType("G", 2)), (1, 0)) == 7 else (0, 1)),
        _leaf_factor("B", 3, _fund_by_dim(SimpleType("B", 3), 8)),   # Spin7
        _leaf_factor("B", 4, _fund_by_dim(SimpleType("B", 4), 16)),  # Spin9
    ]
    pool += [_so_leaf(n, family="so-vec") for n in range(5, 13)]
    # realified unitary and symplectic factors
    for n in range(2, 5):
        su = _leaf_factor("A", n - 1, tuple([1] + [0] * (n - 2)))
        pool.append(replace(su, rlabel=f"R^{su.rdim}", vec=False))
        pool.append(_circle_factor(su, real_label=True))
    sp2 = _leaf_factor("B", 2, (0, 1))
    pool.append(replace(sp2, rlabel=f"R^{sp2.rdim}"))
    pool.append(_circle_factor(sp2, real_label=True))
    su2c4 = _leaf_factor("A", 1, (3,))
    pool.append(replace(su2c4, rlabel=f"R^{su2c4.rdim}"))
    return sorted(pool, key=lambda f: (f.rdim, f.glabel))


def _h_pool(c_target):
    """Quaternionic-type factors (for tensor products over H)."""
    types = ([SimpleType("A", n) for n in range(1, 9)]
             + [SimpleType("B", n) for n in range(2, 6)]
             + [SimpleType("C", n) for n in range(3, 9)]
             + [SimpleType("D", 6), SimpleType("E", 7)])
    pool, seen = [], set()
    for t in types:
        rs = build_root_system(t)
        bound = rs.group_dim + 3 + c_target    # partner is at least SP1
        for w in dominant_weights_up_to_dim(rs, bound):
            if not any(w):
                continue
            t2, w2 = canonical_weight(t, w)
            key = simple_key(t2, w2)
            if key in seen:
                continue
            seen.add(key)
            rs2 = build_root_system(t2)
            if fs_type(rs2, w2) != QUATERNIONIC:
                continue
            if real_dim(rs2, w2) > bound:
                continue
            pool.append(_leaf_factor(t2.family, t2.rank, w2))
    return sorted(pool, key=lambda f: (f.rdim, f.glabel))


def _c_pool(c_target):
    """Complex- or quaternionic-type factors (for complex chains)."""
    types = ([SimpleType("A", n) for n in range(1, 9)]
             + [SimpleType("B", 2)]
             + [SimpleType("C", n) for n in range(3, 9)]
             + [SimpleType("D", 5), SimpleType("D", 6),
                SimpleType("E", 6), SimpleType("E", 7)])
    pool, seen = [], set()
    for t in types:
        rs = build_root_system(t)
        bound = rs.group_dim + 1 + c_target
        for w in dominant_weights_up_to_dim(rs, bound):
            if not any(w):
                continue
            t2, w2 = canonical_weight(t, w)
            key = simple_key(t2, w2)
            if key in seen:
                continue
            seen.add(key)
            rs2 = build_root_system(t2)
            if fs_type(rs2, w2) == REAL:
                continue
            if real_dim(rs2, w2) > bound:
                continue
            pool.append(_leaf_factor(t2.family, t2.rank, w2))
    return sorted(pool, key=lambda f: (f.rdim, f.glabel))


def _is_su_vector(f):
    if f.key[0] != "leaf" or f.key[1] != "A":
        return False
    r = f.key[2]
    return f.key[3] in (tuple([1] + [0] * (r - 1)),
                        tuple([0] * (r - 1) + [1]))


def _is_sp_vector(f):
    k = f.key
    if k[0] != "leaf":
        return False
    if k[1] == "C" and k[3] == tuple([1] + [0] * (k[2] - 1)):
        return True
    return k[1] == "B" and k[2] == 2 and k[3] == (0, 1)   # SP2 = Spin5


# ---------------------------------------------------------------------------
# product enumeration
# ---------------------------------------------------------------------------

def _product_candidate(kind, f1, f2, circle=False):
    """Assemble a tensor-product candidate from two pool factors."""
    node = {"R": TensorR, "C": TensorC, "H": TensorH}[kind]
    expr = node(f1.expr, f2.expr)
    gl1, rl = f1.glabel, f"{f1.rlabel} (x)_{kind} {f2.rlabel}"
    if circle:
        expr = with_circle(expr)
        gl1 = _circle_group_label(gl1)
    gl = f"{gl1} x {f2.glabel}"
    gdim = f1.gdim + f2.gdim + (1 if circle else 0)
    rdim = f1.rdim * f2.rdim if kind == "R" else None
    if kind == "C":
        rdim = f1.rdim * f2.rdim // 2
    if kind == "H":
        rdim = f1.rdim * f2.rdim // 4
    key = (kind,) + tuple(sorted((f1.key, f2.key))) + (("U",) if circle else ())
    fams = (kind, f1.key, f2.family, circle) if f2.family else None
    return {"expr": expr, "glabel": gl, "rlabel": rl, "gdim": gdim,
            "rdim": rdim, "key": key, "family": fams, "param": f2.param,
            "base_expr": node(f1.expr, f2.expr) if circle else None}


def _real_candidates(c_target):
    small = _small_real_factors()
    pool = _real_pool(c_target)
    cands = []
    for i, f1 in enumerate(small):
        for f2 in small[i:] + pool:
            if f2.rdim < f1.rdim:
                continue
            if f1.vec and f2.vec:
                continue          # SO(m) x SO(n) on R^m (x) R^n: polar family
            if f1.commutant != "R" and f2.commutant != "R":
                continue          # the real tensor product would be reducible
            cands.append(_product_candidate("R", f1, f2))
    return cands


def _h_candidates(c_target):
    pool = _h_pool(c_target)
    cands = []
    for i, f1 in enumerate(pool):
        for f2 in pool[i:]:
            if _is_sp_vector(f1) and _is_sp_vector(f2):
                continue          # SP(m) x SP(n) on Q^m (x) Q^n: polar family
            if _is_sp_vector(f2):
                f2 = replace(f2, family="sp-vec", param=f2.key[2])
            cands.append(_product_candidate("H", f1, f2))
    return cands


def _c_candidates(c_target):
    pool = _c_pool(c_target)
    cands = []
    for f in pool:
        # single simple factor extended by a central circle
        cands.append(_product_candidate_single(f))
    for i, f1 in enumerate(pool):
        for f2 in pool[i:]:
            su1, su2v = _is_su_vector(f1), _is_su_vector(f2)
            for circle in (False, True):
                if not circle and f1.commutant == QUATERNIONIC \
                        and f2.commutant == QUATERNIONIC:
                    # j (x) j is a real structure on the complex tensor
                    # product, so its realification is reducible (two
                    # copies of the tensor product over H)
                    continue
                if su1 and su2v:
                    m, n = f1.key[2] + 1, f2.key[2] + 1
                    if m != n or circle:
                        continue  # SU(m) (x) U(n): polar family
                    f2s = replace(f2, family="su-vec", param=n)
                    cands.append(_product_candidate("C", f1, f2s, circle))
                    continue
                f2s = f2
                if _is_sp_vector(f2):
                    f2s = replace(f2, family="sp-vec-c", param=f2.key[2])
                elif su2v:
                    f2s = replace(f2, family="su-vec-c", param=f2.key[2] + 1)
                cands.append(_product_candidate("C", f1, f2s, circle))
    return cands


def _product_candidate_single(f):
    c = _circle_factor(f)
    return {"expr": c.expr, "glabel": c.glabel, "rlabel": c.rlabel,
            "gdim": c.gdim, "rdim": c.rdim, "key": c.key,
            "family": None, "param": 0, "base_expr": f.expr}


def enumerate_products(c_target, seed=DEFAULT_SEED):
    """Irreducible tensor-product representations (two simple factors,
    possibly with a central circle) of exact cohomogeneity c_target."""
    if c_target not in (4, 5):
        raise ValueError("c_target must be 4 or 5")
    cands = (_real_candidates(c_target) + _h_candidates(c_target)
             + _c_candidates(c_target))
    cands.sort(key=lambda c: (c["param"], c["rdim"], c["glabel"], c["rlabel"]))
    rows, seen, dead = [], set(), set()
    for cand in cands:
        if cand["key"] in seen:
            continue
        seen.add(cand["key"])
        if cand["family"] in dead:
            continue
        if cand["rdim"] > cand["gdim"] + c_target:
            continue              # basic dimension bound
        c = _cohom(cand["expr"], seed)
        if cand["family"] and c > c_target:
            # cohomogeneity grows along the vector series (monotonicity)
            dead.add(cand["family"])
        if c != c_target:
            continue
        if cand.get("base_expr") is not None and \
                _cohom(cand["base_expr"], seed) == c:
            # the extra circle acts within the closure of the base orbits:
            # orbit-equivalent to the smaller group, which is listed instead
            continue
        rows.append(ClassificationRow(
            group_label=cand["glabel"], rep_label=cand["rlabel"],
            rep_expr=cand["expr"], cohomogeneity=c,
            polar=_polar(cand["expr"], seed),
            group_dim=cand["gdim"], dim_V=cand["rdim"], key=cand["key"]))
    return sorted(rows, key=_sort_key)


def _annotate_duplicates(rows):
    """Flag rows that agree in every computed invariant (candidates for
    orbit-equivalence, kept as separate rows)."""
    by_inv = {}
    for r in rows:
        by_inv.setdefault((r.cohomogeneity, r.polar, r.dim_V), []).append(r)
    for group in by_inv.values():
        if len(group) > 1:
            for r in group:
                others = ", ".join(f"{o.group_label} on {o.rep_label}"
                                   for o in group if o is not r)
                r.notes = (r.notes + "; " if r.notes else "") + \
                    f"same invariants as {others}"
    return rows


# ---------------------------------------------------------------------------
# cohomogeneity one
# ---------------------------------------------------------------------------

def enumerate_c1(seed=DEFAULT_SEED):
    """The transitive-sphere list: all irreducible actions of exact
    cohomogeneity 1 with classical parameters at most 8 (Spin9 included)."""
    rows, seen = [], set()
    types = ([SimpleType("A", n) for n in range(1, 8)]
             + [SimpleType("B", n) for n in range(2, 5)]
             + [SimpleType("C", n) for n in range(3, 9)]
             + [SimpleType("D", 4), SimpleType("G", 2)])
    leaves = []
    for t in types:
        rs = build_root_system(t)
        bound = rs.group_dim + 2
        for w in dominant_weights_up_to_dim(rs, bound):
            if not any(w):
                continue
            t2, w2 = canonical_weight(t, w)
            key = simple_key(t2, w2)
            if key in seen:
                continue
            seen.add(key)
            rs2 = build_root_system(t2)
            rd = real_dim(rs2, w2)
            if rd < 3 or rd > bound:
                continue
            leaves.append(_leaf_factor(t2.family, t2.rank, w2))
    sp1 = _leaf_factor("A", 1, (1,))
    for f in leaves:
        for cand in _c1_extensions(f, sp1):
            if cand["key"] in seen:
                continue
            seen.add(cand["key"])
            if cand["rdim"] > cand["gdim"] + 1:
                continue
            if _cohom(cand["expr"], seed) != 1:
                continue
            rows.append(ClassificationRow(
                group_label=cand["glabel"], rep_label=cand["rlabel"],
                rep_expr=cand["expr"], cohomogeneity=1, polar=True,
                group_dim=cand["gdim"], dim_V=cand["rdim"],
                key=cand["key"]))
        if _cohom(f.expr, seed) != 1:
            continue
        rows.append(ClassificationRow(
            group_label=f.glabel, rep_label=f.rlabel, rep_expr=f.expr,
            cohomogeneity=1, polar=True, group_dim=f.gdim, dim_V=f.rdim,
            key=f.key))
    return sorted(rows, key=_sort_key)


def _c1_extensions(f, sp1):
    rs = build_root_system(SimpleType(f.key[1], f.key[2]))
    ft = fs_type(rs, f.key[3])
    out = []
    if ft != REAL:
        c = _circle_factor(f)
        out.append({"expr": c.expr, "glabel": c.glabel, "rlabel": c.rlabel,
                    "gdim": c.gdim, "rdim": c.rdim, "key": c.key})
    if ft == QUATERNIONIC:
        out.append(_product_candidate("H", f, sp1))
    return out


# ---------------------------------------------------------------------------
# table annotation and assembly
# ---------------------------------------------------------------------------

class TableError(ValueError):
    """A reference-table cell could not be decided."""


def annotate_tables(rows, seed=DEFAULT_SEED):
    """Fill in copolarity and boundary for table rows.

    Copolarity: 0 for polar rows; the engine's reduction bound when the
    principal isotropy algebra is nontrivial; "trivial" when the orbit
    space is certified boundary-free (a boundary-free quotient admits no
    strict reduction, so no proper generalized section exists); otherwise
    the exact value is carried from the reference fixture.  Boundary:
    engine verdicts where decided, fixture cells otherwise.  Any table
    cell left undecided raises :class:`TableError`.
    """
    out = []
    failures = []
    for row in rows:
        rep = _analysis(row.rep_expr, seed)
        key = (row.group_label, row.rep_label)
        prov = PROV_COMPUTED
        if rep.boundary == BOUNDARY_YES:
            boundary = "yes"
        elif rep.boundary == BOUNDARY_NO:
            boundary = "no"
        else:
            boundary = _fixtures.FIXTURE_BOUNDARY.get(key)
            if boundary is not None:
                prov = PROV_FIXTURE
        if rep.polar:
            copol = 0
        elif rep.copolarity_upper is not None:
            copol = rep.copolarity_upper
        elif boundary == "no":
            copol = "trivial"
        else:
            copol = _fixtures.FIXTURE_COPOLARITY.get(key)
            if copol is not None:
                prov = PROV_FIXTURE
        fixture_exact = _fixtures.FIXTURE_COPOLARITY.get(key)
        if isinstance(fixture_exact, int) and rep.copolarity_upper is not None:
            if rep.copolarity_upper < fixture_exact:
                raise TableError(
                    f"{key}: computed copolarity bound {rep.copolarity_upper}"
                    f" contradicts reference value {fixture_exact}")
        if copol is None or boundary is None:
            failures.append(key)
            continue
        out.append(replace(row, copolarity=copol, boundary=boundary,
                           provenance=prov, report=rep))
    if failures:
        raise TableError(f"undecided table cells for rows: {failures}")
    return _annotate_duplicates(sorted(out, key=_sort_key))


def classify_tables(c_target, seed=DEFAULT_SEED):
    """The classification table for cohomogeneity 4 or 5: non-polar
    irreducible representations with all columns decided."""
    rows = enumerate_simple(c_target, c_target, seed) \
        + enumerate_products(c_target, seed)
    rows = [r for r in rows if not r.polar]
    return annotate_tables(rows, seed)


def reference_table(c_target):
    """The embedded transcription of the published table."""
    src = {4: _fixtures.COHOM4_ROWS, 5: _fixtures.COHOM5_ROWS}[c_target]
    return [{"group": g, "rep": r, "cohomogeneity": c_target,
             "polar": False, "copolarity": cop, "boundary": b}
            for g, r, cop, b in src]


def compare_to_reference(rows, fixture):
    """Exact row-set comparison; returns a diff record."""
    got = {(r.group_label, r.rep_label): r for r in rows}
    want = {(f["group"], f["rep"]): f for f in fixture}
    missing = sorted(set(want) - set(got))
    extra = sorted(set(got) - set(want))
    mismatched = []
    for k in sorted(set(got) & set(want)):
        r, f = got[k], want[k]
        for name in ("cohomogeneity", "polar", "copolarity", "boundary"):
            if getattr(r, name) != f[name]:
                mismatched.append((k, name, getattr(r, name), f[name]))
    return {"missing": missing, "extra": extra, "mismatched": mismatched,
            "match": not (missing or extra or mismatched)}


# ---------------------------------------------------------------------------
# fixture translation for the simple-group tables
# ---------------------------------------------------------------------------

def _so_type_weight(n, kind):
    if n == 3:
        return SimpleType("A", 1), {"vec": (2,), "S2_0": (4,)}[kind]
    if n == 6:
        t = SimpleType("A", 3)
        return t, {"vec": (0, 1, 0), "S2_0": (0, 2, 0),
                   "L2": _adjoint_weight(t)}[kind]
    t = SimpleType("B", (n - 1) // 2) if n % 2 else SimpleType("D", n // 2)
    e1 = tuple([1] + [0] * (t.rank - 1))
    if kind == "vec":
        return t, e1
    if kind == "S2_0":
        return t, tuple(2 * x for x in e1)
    if kind == "L2":
        return t, _adjoint_weight(t)
    raise ValueError(kind)


def fixture_type_weight(fam, n, kind):
    """Translate a fixture descriptor into highest-weight data."""
    if fam == "SO":
        if kind.startswith("harmonic"):
            return SimpleType("A", 1), (int(kind[8:]) - 1,)
        return _so_type_weight(n, kind)
    if fam == "SU":
        if kind == "vec4":
            return SimpleType("A", 1), (3,)
        t = SimpleType("A", n - 1)
        r = t.rank
        table = {"vec": tuple([1] + [0] * (r - 1)),
                 "S2": tuple([2] + [0] * (r - 1)) if r > 1 else (4,),
                 "adjoint": _adjoint_weight(t)}
        for k, idx in (("L2", 1), ("L3", 2), ("L4", 3)):
            table[k] = tuple(1 if i == idx else 0 for i in range(r))
        return t, table[kind]
    if fam == "SP":
        if n == 2:
            t = SimpleType("B", 2)
            return t, {"vec": (0, 1), "S2": _adjoint_weight(t)}[kind]
        t = SimpleType("C", n)
        r = n
        table = {"vec": tuple([1] + [0] * (r - 1)), "S2": _adjoint_weight(t)}
        for k, idx in (("L2_0", 1), ("L3_0", 2), ("L4_0", 3)):
            table[k] = tuple(1 if i == idx else 0 for i in range(r))
        return t, table[kind]
    if fam == "Spin":
        if n % 2:
            t = SimpleType("B", (n - 1) // 2)
            return t, _fund_by_dim(t, 2 ** t.rank)
        t = SimpleType("D", n // 2)
        return t, _fund_by_dim(t, 2 ** (t.rank - 1))
    t = {"G2": SimpleType("G", 2), "F4": SimpleType("F", 4),
         "E6": SimpleType("E", 6), "E7": SimpleType("E", 7),
         "E8": SimpleType("E", 8)}[fam]
    if kind == "adjoint":
        return t, _adjoint_weight(t)
    return t, _fund_by_dim(t, int(kind[4:]))


def reference_simple_keys():
    """Canonical (key, cohomogeneity, polar) set for the simple tables."""
    out = set()
    for polar, table in ((True, _fixtures.SIMPLE_POLAR),
                         (False, _fixtures.SIMPLE_NONPOLAR)):
        for fam, n, kind, c in table:
            t, w = fixture_type_weight(fam, n, kind)
            out.add((simple_key(t, w), c, polar))
    return out


def reference_c1_keys():
    """Canonical key set for the cohomogeneity-one list."""
    out = set()
    for fam, n, kind in _fixtures.C1_ROWS:
        if fam == "U":
            t, w = fixture_type_weight("SU", n, "vec")
            out.add(("U", simple_key(t, w)))
        elif fam == "SPxU1":
            t, w = fixture_type_weight("SP", n, "vec")
            out.add(("U", simple_key(t, w)))
        elif fam == "SPxSP1":
            k1 = simple_key(SimpleType("A", 1), (1,))
            if n == 1:
                k2 = k1
            else:
                t, w = fixture_type_weight("SP", n, "vec")
                k2 = simple_key(t, w)
            out.add(("H",) + tuple(sorted((k1, k2))))
        else:
            t, w = fixture_type_weight(fam, n, kind)
            out.add(simple_key(t, w))
    return out


# ---------------------------------------------------------------------------
# emitters
# ---------------------------------------------------------------------------

_SCHEMA = ("group", "rep", "cohomogeneity", "polar", "copolarity",
           "boundary", "provenance")


def row_record(row):
    copol = row.copolarity
    return {"group": row.group_label, "rep": row.rep_label,
            "cohomogeneity": row.cohomogeneity, "polar": row.polar,
            "copolarity": "unknown" if copol is None else copol,
            "boundary": row.boundary or "unknown",
            "provenance": row.provenance}


def to_json(rows):
    return json.dumps([row_record(r) for r in rows], indent=2) + "\n"


def to_csv(rows):
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=_SCHEMA, lineterminator="\n")
    writer.writeheader()
    for r in rows:
        writer.writerow(row_record(r))
    return buf.getvalue()


def to_text(rows):
    """Aligned text (markdown pipe) table."""
    recs = [[str(rec[k]) for k in _SCHEMA] for rec in map(row_record, rows)]
    widths = [max([len(h)] + [len(rec[i]) for rec in recs])
              for i, h in enumerate(_SCHEMA)]
    def line(cells):
        return "| " + " | ".join(c.ljust(w) for c, w in zip(cells, widths)) \
            + " |"
    out = [line(_SCHEMA),
           "|" + "|".join("-" * (w + 2) for w in widths) + "|"]
    out += [line(rec) for rec in recs]
    return "\n".join(out) + "\n"
