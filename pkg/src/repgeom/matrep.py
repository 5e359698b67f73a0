"""Explicit matrix models of compact-group representations over Q.

The complex irreducible module for a simple type is built directly from
highest-weight data: starting from an abstract highest-weight vector,
lowering operators are applied level by level and linear dependencies are
resolved with the contravariant (Shapovalov) form, so the basis is a
weight basis and every matrix entry is an exact rational number.

On top of the complex module the compact real form acts by the operators
e_a - f_a, i(e_a + f_a) and i h_j (one pair per positive root).  Real and
quaternionic structure maps are obtained from the invariant bilinear
form, and the calculus of realification, real forms, tensor products
(over R, C and H) and direct sums produces orthogonal actions on real
vector spaces.

A constructed action carries its invariant inner product ("gram")
explicitly; generators are skew-adjoint with respect to it.  The gram
matrix is block diagonal over weights but not in general a rational
multiple of the identity (no rational orthonormal basis exists for some
modules), so all downstream geometry is written against the carried
form rather than assuming the standard dot product.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt

from .linalg import (
    ONE,
    ZERO,
    IncrementalKernel,
    SpMat,
    bareiss_echelon,
    invert,
    kron,
    solve_upper,
)
from .irrepmeta import (
    COMPLEX,
    QUATERNIONIC,
    REAL,
    fs_type,
    weight_multiplicities,
)
from .rootsys import SimpleType, build_root_system, weyl_dim


# ---------------------------------------------------------------------------
# the complex weight module
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class WeightModule:
    """A complex irreducible module in a weight basis over Q.

    E, F, H are the simple raising/lowering/Cartan operators; gram is the
    contravariant form with the highest-weight vector normalized to 1.
    """
    type: SimpleType
    lam: tuple
    dim: int
    weights: tuple            # weight labels per basis index
    E: tuple                  # SpMat per simple root
    F: tuple
    H: tuple
    gram: SpMat


def _dense_rank(mat):
    """Rank of a small dense Fraction matrix."""
    if not mat:
        return 0
    from .linalg import _integer_rows
    _, piv = bareiss_echelon(_integer_rows(mat))
    return len(piv)


@lru_cache(maxsize=None)
def construct_weight_module(t: SimpleType, lam: tuple) -> WeightModule:
    """Build the irreducible module with highest weight lam explicitly."""
    rs = build_root_system(t)
    lam = tuple(lam)
    mults = weight_multiplicities(rs, lam)
    n = rs.rank
    cartan_inv = invert([list(row) for row in rs.cartan])
    simple_labs = [rs.root_labels(tuple(1 if j == i else 0 for j in range(n)))
                   for i in range(n)]

    def level(mu):
        s = ZERO
        for i in range(n):
            for j in range(n):
                s += cartan_inv[i][j] * (lam[j] - mu[j])
        assert s.denominator == 1
        return int(s)

    by_level = {}
    for mu in mults:
        by_level.setdefault(level(mu), []).append(mu)
    for lv in by_level:
        by_level[lv].sort()

    idx_of = {lam: [0]}
    weights = [lam]
    gram_entry = {(0, 0): ONE}      # (a, b) -> <b_a, b_b>, same-weight pairs
    fexp = {}                       # (i, parent_idx) -> {idx: coeff}
    eexp = {(i, 0): {} for i in range(n)}

    for lv in sorted(by_level)[1:]:
        for mu in by_level[lv]:
            target = mults[mu]
            cands = []
            for i in range(n):
                nu = tuple(mu[k] + simple_labs[i][k] for k in range(n))
                for p in idx_of.get(nu, ()):
                    cands.append((i, p, nu))
            # raising expansions of each candidate f_i(b_p):
            # e_j f_i b = f_i e_j b + delta_ij nu_i b
            cand_e = []
            for (i, p, nu) in cands:
                ev = []
                for j in range(n):
                    acc = {}
                    for u, cu in eexp[(j, p)].items():
                        fe = fexp.get((i, u))
                        if fe:
                            for q, cq in fe.items():
                                acc[q] = acc.get(q, ZERO) + cu * cq
                    if i == j and nu[i]:
                        acc[p] = acc.get(p, ZERO) + Fraction(nu[i])
                    ev.append({k: v for k, v in acc.items() if v})
                cand_e.append(ev)
            # contravariant gram of the candidates:
            # <f_i b_p, cand_l> = sum_q cand_e[l][i][q] <b_p, b_q>
            nc = len(cands)
            M = [[ZERO] * nc for _ in range(nc)]
            for k in range(nc):
                ik, pk, _ = cands[k]
                for l in range(nc):
                    s = ZERO
                    for q, cq in cand_e[l][ik].items():
                        g = gram_entry.get((pk, q))
                        if g:
                            s += cq * g
                    M[k][l] = s
            # greedy selection of a basis among the candidates
            chosen = []
            for k in range(nc):
                trial = chosen + [k]
                sub = [[M[a][b] for b in trial] for a in trial]
                if _dense_rank(sub) == len(trial):
                    chosen.append(k)
                    if len(chosen) == target:
                        break
            assert len(chosen) == target, (t, lam, mu, len(chosen), target)
            base = len(weights)
            new_idx = list(range(base, base + target))
            idx_of[mu] = new_idx
            for _ in range(target):
                weights.append(mu)
            gsub = [[M[a][b] for b in chosen] for a in chosen]
            for a in range(target):
                for b in range(target):
                    if gsub[a][b]:
                        gram_entry[(new_idx[a], new_idx[b])] = gsub[a][b]
            # expansions of every candidate in the chosen basis
            for k in range(nc):
                rhs = [M[c][k] for c in chosen]
                coords = solve_upper(gsub, rhs)
                ik, pk, _ = cands[k]
                fexp[(ik, pk)] = {new_idx[a]: coords[a]
                                  for a in range(target) if coords[a]}
            # raising expansions of the chosen basis vectors
            for a, k in enumerate(chosen):
                gi = new_idx[a]
                for j in range(n):
                    eexp[(j, gi)] = dict(cand_e[k][j])

    dim = len(weights)
    assert dim == weyl_dim(rs, lam)
    E = [SpMat(dim, dim) for _ in range(n)]
    F = [SpMat(dim, dim) for _ in range(n)]
    H = [SpMat(dim, dim) for _ in range(n)]
    for (i, p), expansion in fexp.items():
        for q, c in expansion.items():
            F[i][(q, p)] = c
    for (j, b), expansion in eexp.items():
        for q, c in expansion.items():
            E[j][(q, b)] = c
    for b, mu in enumerate(weights):
        for j in range(n):
            if mu[j]:
                H[j][(b, b)] = Fraction(mu[j])
    gram = SpMat(dim, dim, {ij: v for ij, v in gram_entry.items()})
    return WeightModule(type=t, lam=lam, dim=dim, weights=tuple(weights),
                        E=tuple(E), F=tuple(F), H=tuple(H), gram=gram)


def _content_scale(m: SpMat):
    """Largest c with m/c still integral-ish: gcd of numerators over lcm of
    denominators; used to keep commutator chains small."""
    num = 0
    den = 1
    for v in m.data.values():
        num = gcd(num, v.numerator)
        den = den * v.denominator // gcd(den, v.denominator)
    if num == 0:
        return ONE
    return Fraction(num, den)


def root_operators(rs, wm: WeightModule):
    """Raising/lowering operators for every positive root.

    Non-simple root operators are iterated commutators with simple ones;
    normalization is immaterial, but the pair (e_a, f_a) is kept adjoint
    with respect to the contravariant form by mirroring the commutators.
    """
    n = rs.rank
    ops = {}
    for root in sorted(rs.positive_roots, key=sum):
        if sum(root) == 1:
            i = root.index(1)
            ops[root] = (wm.E[i], wm.F[i])
            continue
        for i in range(n):
            if root[i] <= 0:
                continue
            beta = root[:i] + (root[i] - 1,) + root[i + 1:]
            if beta in ops:
                eb, fb = ops[beta]
                eg = wm.E[i] * eb - eb * wm.E[i]
                fg = fb * wm.F[i] - wm.F[i] * fb
                assert not eg.is_zero()
                c = _content_scale(eg)
                ops[root] = (eg.scale(1 / c), fg.scale(1 / c))
                break
        else:
            raise AssertionError(f"no decomposition for root {root}")
    return [ops[r] for r in rs.positive_roots]


# ---------------------------------------------------------------------------
# invariant bilinear form and structure maps
# ---------------------------------------------------------------------------

SYMMETRIC = "Symmetric"
ANTISYMMETRIC = "Antisymmetric"


def invariant_bilinear_form(wm: WeightModule):
    """Invariant bilinear form of the complex module.

    Solves B X + X^T B = 0 over the simple raising and lowering operators;
    returns (kind, B) with kind Symmetric/Antisymmetric, or (None, None)
    when no invariant form exists (non-self-dual module).
    """
    dim = wm.dim
    idx_of = {}
    for a, mu in enumerate(wm.weights):
        idx_of.setdefault(mu, []).append(a)
    support = []
    upos = {}
    for a, mu in enumerate(wm.weights):
        neg = tuple(-x for x in mu)
        for b in idx_of.get(neg, ()):
            upos[(a, b)] = len(support)
            support.append((a, b))
    if not support:
        return None, None
    mats = list(wm.E) + list(wm.F)
    eqs = {}
    for X in mats:
        for (c, b), v in X.data.items():
            # (B X)_{ab} = sum_c B_{ac} X_{cb}
            negc = tuple(-x for x in wm.weights[c])
            for a in idx_of.get(negc, ()):
                key = (id(X), a, b)
                eqs.setdefault(key, {})[upos[(a, c)]] = \
                    eqs.get(key, {}).get(upos[(a, c)], ZERO) + v
        for (c, a), v in X.data.items():
            # (X^T B)_{ab} = sum_c X_{ca} B_{cb}
            negc = tuple(-x for x in wm.weights[c])
            for b in idx_of.get(negc, ()):
                key = (id(X), a, b)
                eqs.setdefault(key, {})[upos[(c, b)]] = \
                    eqs.get(key, {}).get(upos[(c, b)], ZERO) + v
    ker = IncrementalKernel(len(support))
    for row_dict in eqs.values():
        row = [ZERO] * len(support)
        for u, cv in row_dict.items():
            row[u] = cv
        ker.add(row)
    basis = ker.kernel()
    if not basis:
        return None, None
    assert len(basis) == 1, "invariant form space not 1-dimensional"
    sol = basis[0]
    B = SpMat(dim, dim)
    for u, (a, b) in enumerate(support):
        if sol[u]:
            B[(a, b)] = sol[u]
    Bt = B.transpose()
    if Bt == B:
        return SYMMETRIC, B
    assert Bt == B.scale(-1), "invariant form neither symmetric nor skew"
    return ANTISYMMETRIC, B


def _gram_inverse(wm: WeightModule) -> SpMat:
    """Blockwise inverse of the contravariant form (block diag by weight)."""
    idx_of = {}
    for a, mu in enumerate(wm.weights):
        idx_of.setdefault(mu, []).append(a)
    out = SpMat(wm.dim, wm.dim)
    for mu, idxs in idx_of.items():
        block = [[wm.gram[(a, b)] for b in idxs] for a in idxs]
        inv = invert(block)
        for i, a in enumerate(idxs):
            for j, b in enumerate(idxs):
                if inv[i][j]:
                    out[(a, b)] = inv[i][j]
    return out


def _rational_sqrt(x: Fraction):
    """Exact square root of a positive rational, or None."""
    num, den = x.numerator, x.denominator
    rn, rd = isqrt(num), isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None


def structure_map(wm: WeightModule):
    """Rational part S of the antilinear structure map of a self-dual module.

    Returns (sign, S) with S^2 = sign * identity: sign +1 for a real-type
    module (S fixes a real form) and -1 for a quaternionic one.
    """
    kind, B = invariant_bilinear_form(wm)
    if kind is None:
        return 0, None
    S = _gram_inverse(wm) * B
    c = _content_scale(S)
    S = S.scale(1 / c)
    sq = S * S
    scalar = sq[(0, 0)]
    assert sq == SpMat.eye(wm.dim, scalar), "structure map square not scalar"
    root = _rational_sqrt(abs(scalar))
    assert root is not None, \
        f"structure map square {scalar} is not a rational square"
    S = S.scale(1 / root)
    return (1 if scalar > 0 else -1), S


# ---------------------------------------------------------------------------
# expression trees
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Leaf:
    """One simple factor acting irreducibly, given by its highest weight."""
    type: SimpleType
    weight: tuple
    display: str = ""


@dataclass(frozen=True)
class Circle:
    """A circle factor acting on C by a character."""
    charge: int = 1


@dataclass(frozen=True)
class TorusRep:
    """A torus acting diagonally on C^m by the given integer characters."""
    characters: tuple     # m tuples of length k


@dataclass(frozen=True)
class TensorR:
    left: object
    right: object


@dataclass(frozen=True)
class TensorC:
    left: object
    right: object


@dataclass(frozen=True)
class TensorH:
    left: object
    right: object


@dataclass(frozen=True)
class DirectSum:
    left: object
    right: object


def with_circle(child):
    """U(m)-style factor: the child's group extended by a central circle."""
    return TensorC(child, Circle(1))


def group_signature(e):
    """Tuple identifying the acting group (used for sum compatibility)."""
    if isinstance(e, Leaf):
        return ((e.type.family, e.type.rank),)
    if isinstance(e, Circle):
        return (("circle",),)
    if isinstance(e, TorusRep):
        return (("torus", len(e.characters[0])),)
    if isinstance(e, (TensorR, TensorC, TensorH)):
        return group_signature(e.left) + group_signature(e.right)
    if isinstance(e, DirectSum):
        sig = group_signature(e.left)
        assert sig == group_signature(e.right), "summands act by different groups"
        return sig
    raise TypeError(f"not a representation expression: {e!r}")


# ---------------------------------------------------------------------------
# complex-linear actions
# ---------------------------------------------------------------------------

class ComplexRep:
    """A complex-linear action of a compact group on C^c, over Q.

    Generators are tagged ("re", A) or ("im", B), standing for the
    complex-linear operators A and iB with A, B rational.  gram is the
    rational part of the invariant hermitian form (symmetric, block
    diagonal over weights).  For self-dual irreducible factors, S is the
    rational part of the antilinear structure map (S^2 = s_sign * id).
    """

    def __init__(self, c, gens, gram, weight_keys, name="",
                 S=None, s_sign=0, expr=None):
        self.c = c
        self.gens = list(gens)
        self.gram = gram
        self.weight_keys = tuple(weight_keys)
        self.name = name
        self.S = S
        self.s_sign = s_sign
        self.expr = expr


@lru_cache(maxsize=None)
def leaf_complex(t: SimpleType, lam: tuple) -> ComplexRep:
    """The complex irreducible module with its compact-form generators."""
    rs = build_root_system(t)
    wm = construct_weight_module(t, lam)
    ops = root_operators(rs, wm)
    gens = []
    for eg, fg in ops:
        gens.append(("re", eg - fg))
        gens.append(("im", eg + fg))
    for h in wm.H:
        gens.append(("im", h))
    assert len(gens) == rs.group_dim
    ft = fs_type(rs, lam)
    S, s_sign = None, 0
    if ft != COMPLEX:
        s_sign, S = structure_map(wm)
        assert (s_sign == 1) == (ft == REAL), \
            "structure-map sign disagrees with the parity criterion"
    return ComplexRep(wm.dim, gens, wm.gram, wm.weights,
                      name=f"{t}:{list(lam)}", S=S, s_sign=s_sign,
                      expr=Leaf(t, tuple(lam)))


def circle_complex(charge: int) -> ComplexRep:
    g = SpMat(1, 1, {(0, 0): Fraction(charge)})
    return ComplexRep(1, [("im", g)], SpMat.eye(1), ((charge,),),
                      name=f"U1^{charge}", expr=Circle(charge))


def torus_complex(characters) -> ComplexRep:
    characters = tuple(tuple(w) for w in characters)
    m = len(characters)
    k = len(characters[0])
    gens = []
    for j in range(k):
        d = SpMat(m, m)
        for i, w in enumerate(characters):
            if w[j]:
                d[(i, i)] = Fraction(w[j])
        gens.append(("im", d))
    return ComplexRep(m, gens, SpMat.eye(m), characters,
                      name=f"T{k} on C{m}", expr=TorusRep(characters))


def tensor_complex(a: ComplexRep, b: ComplexRep, expr=None) -> ComplexRep:
    """Outer tensor product over C of two complex-linear actions."""
    ia, ib = SpMat.eye(a.c), SpMat.eye(b.c)
    gens = [(tag, kron(m, ib)) for tag, m in a.gens]
    gens += [(tag, kron(ia, m)) for tag, m in b.gens]
    keys = tuple(ka + kb for ka in a.weight_keys for kb in b.weight_keys)
    S = None
    s_sign = 0
    if a.S is not None and b.S is not None:
        S = kron(a.S, b.S)
        s_sign = a.s_sign * b.s_sign
    return ComplexRep(a.c * b.c, gens, kron(a.gram, b.gram), keys,
                      name=f"({a.name})(x)_C({b.name})", S=S, s_sign=s_sign,
                      expr=expr)


# ---------------------------------------------------------------------------
# real actions
# ---------------------------------------------------------------------------

class LieAction:
    """Generators of a compact Lie algebra acting on a real vector space.

    Every generator X satisfies X^T gram + gram X = 0 exactly; gram is a
    positive-definite rational symmetric form carried with the action.
    """

    def __init__(self, dim_V, generators, gram, name="", expr=None,
                 weight_keys=None, complex_structure=None, factors=None,
                 embed=None):
        self.dim_V = dim_V
        self.generators = list(generators)
        self.gram = gram
        self.name = name
        self.expr = expr
        self.weight_keys = weight_keys
        self.complex_structure = complex_structure  # J with J^2 = -1, if any
        self.factors = factors        # ("R"|"C"|"H"|"Sum", left, right)
        self.embed = embed            # pure-tensor/summand embedding, if any

    @property
    def group_dim(self):
        return len(self.generators)

    def check(self):
        for X in self.generators:
            assert X.is_skew_wrt(self.gram), "generator not skew-adjoint"
        return True


def _realify_mat(tag, m, c):
    """Realification of A (tag "re") or iB (tag "im") on R^{2c}."""
    out = SpMat(2 * c, 2 * c)
    if tag == "re":
        for (i, j), v in m.data.items():
            out[(i, j)] = v
            out[(c + i, c + j)] = v
    else:
        for (i, j), v in m.data.items():
            out[(i, j + c)] = -v
            out[(c + i, j)] = v
    return out


def realify(crep: ComplexRep, expr=None, name=None, factors=None,
            embed=None) -> LieAction:
    """The underlying real action of a complex-linear action."""
    c = crep.c
    gens = [_realify_mat(tag, m, c) for tag, m in crep.gens]
    gram = SpMat(2 * c, 2 * c)
    for (i, j), v in crep.gram.data.items():
        gram[(i, j)] = v
        gram[(c + i, c + j)] = v
    J = SpMat(2 * c, 2 * c)
    for i in range(c):
        J[(i, c + i)] = -ONE
        J[(c + i, i)] = ONE
    keys = crep.weight_keys + crep.weight_keys
    return LieAction(2 * c, gens, gram, name=name or crep.name, expr=expr,
                     weight_keys=keys, complex_structure=J, factors=factors,
                     embed=embed)


def _neg_key(key):
    return tuple(-x for x in key)


def real_form(crep: ComplexRep, expr=None, name=None, factors=None,
              embed_complex=None) -> LieAction:
    """The rational real form of a complex action with S^2 = +1.

    The fixed space of the antilinear map v -> S(conj v) has the rational
    basis (+1-eigenvectors of S, -1-eigenvectors of S); "re" generators
    preserve the split and "im" generators swap it with a sign.
    """
    S = crep.S
    assert S is not None and crep.s_sign == 1, "no real structure available"
    c = crep.c
    groups = {}
    for a, key in enumerate(crep.weight_keys):
        groups.setdefault(key, []).append(a)
    cols = []       # sparse columns of the eigenbasis matrix P
    tags = []       # +1 or -1 eigenvalue per column
    col_keys = []
    blocks = []     # (global indices, local column list) per weight pair
    done = set()
    for key in sorted(groups):
        if key in done:
            continue
        nkey = _neg_key(key)
        if nkey != key and nkey not in groups:
            raise AssertionError("self-dual module with unpaired weight")
        if nkey == key:
            idxs = groups[key]
            loc = {a: i for i, a in enumerate(idxs)}
            s0 = [[ZERO] * len(idxs) for _ in idxs]
            for a in idxs:
                for b in idxs:
                    v = S[(a, b)]
                    if v:
                        s0[loc[a]][loc[b]] = v
            local_cols = []
            for sign in (1, -1):
                cand = []
                for j in range(len(idxs)):
                    col = {i: s0[i][j] for i in range(len(idxs)) if s0[i][j]}
                    col[j] = col.get(j, ZERO) + sign
                    col = {i: v for i, v in col.items() if v}
                    if col:
                        cand.append(col)
                picked = []
                for col in cand:
                    trial = picked + [col]
                    dense = [[t.get(i, ZERO) for i in range(len(idxs))]
                             for t in trial]
                    if _dense_rank(dense) == len(trial):
                        picked.append(col)
                for col in picked:
                    cols.append({idxs[i]: v for i, v in col.items()})
                    tags.append(sign)
                    col_keys.append(key)
                    local_cols.append(len(cols) - 1)
            assert len(local_cols) == len(idxs)
            blocks.append((idxs, local_cols))
        else:
            done.add(nkey)
            ia, ib = groups[key], groups[nkey]
            assert len(ia) == len(ib)
            local_cols = []
            ckey = max(key, nkey)
            for sign in (1, -1):
                for a in ia:
                    col = {a: ONE}
                    for b in ib:
                        v = S[(b, a)]
                        if v:
                            col[b] = col.get(b, ZERO) + sign * v
                    cols.append({k: v for k, v in col.items() if v})
                    tags.append(sign)
                    col_keys.append(ckey)
                    local_cols.append(len(cols) - 1)
            blocks.append((ia + ib, local_cols))
    assert len(cols) == c
    P = SpMat(c, c)
    for j, col in enumerate(cols):
        for i, v in col.items():
            P[(i, j)] = v
    # blockwise inverse of P
    Pinv = SpMat(c, c)
    for idxs, local_cols in blocks:
        loc = {a: i for i, a in enumerate(idxs)}
        dense = [[ZERO] * len(local_cols) for _ in idxs]
        for jj, j in enumerate(local_cols):
            for a, v in cols[j].items():
                dense[loc[a]][jj] = v
        inv = invert(dense)
        for jj, j in enumerate(local_cols):
            for ii, a in enumerate(idxs):
                if inv[jj][ii]:
                    Pinv[(j, a)] = inv[jj][ii]
    assert (Pinv * P) == SpMat.eye(c)
    gens = []
    for tag, m in crep.gens:
        n = Pinv * (m * P)
        out = SpMat(c, c)
        if tag == "re":
            for (i, j), v in n.data.items():
                assert tags[i] == tags[j], "re-generator mixes eigenspaces"
                out[(i, j)] = v
        else:
            for (i, j), v in n.data.items():
                assert tags[i] != tags[j], "im-generator preserves eigenspaces"
                out[(i, j)] = v if tags[j] == 1 else -v
        gens.append(out)
    gp = P.transpose() * (crep.gram * P)
    gram = SpMat(c, c)
    for (i, j), v in gp.data.items():
        if tags[i] == tags[j]:
            gram[(i, j)] = v
    # realified coordinates -> real-form coordinates, for embeddings
    half = Fraction(1, 2)
    proj_x = SpMat(c, c)    # rows for +1 columns applied to the x part
    proj_y = SpMat(c, c)    # rows for -1 columns applied to the y part
    ip_s = SpMat.eye(c) + S
    im_s = SpMat.eye(c) - S
    px = Pinv * ip_s.scale(half)
    py = Pinv * im_s.scale(half)
    for (i, j), v in px.data.items():
        if tags[i] == 1:
            proj_x[(i, j)] = v
    for (i, j), v in py.data.items():
        if tags[i] == -1:
            proj_y[(i, j)] = v

    def project_realified(x, y):
        out = proj_x.apply(x)
        out2 = proj_y.apply(y)
        return [a + b for a, b in zip(out, out2)]

    embed = None
    if embed_complex is not None:
        def embed(v1, v2):
            x, y = embed_complex(v1, v2)
            return project_realified(x, y)
    return LieAction(c, gens, gram, name=name or crep.name, expr=expr,
                     weight_keys=tuple(col_keys), factors=factors,
                     embed=embed)


def _vec_kron(u, v):
    out = []
    for a in u:
        if a:
            out.extend(a * b for b in v)
        else:
            out.extend(ZERO for _ in v)
    return out


def _complex_tensor_embed(c1, c2):
    """Realified coordinates of (x1+iy1) (x) (x2+iy2)."""
    def embed(v1, v2):
        x1, y1 = v1[:c1], v1[c1:]
        x2, y2 = v2[:c2], v2[c2:]
        xx = _vec_kron(x1, x2)
        yy = _vec_kron(y1, y2)
        xy = _vec_kron(x1, y2)
        yx = _vec_kron(y1, x2)
        x = [a - b for a, b in zip(xx, yy)]
        y = [a + b for a, b in zip(xy, yx)]
        return x, y
    return embed


def tensor_real(a: LieAction, b: LieAction, expr=None) -> LieAction:
    """Outer tensor product over R of two real actions."""
    ia, ib = SpMat.eye(a.dim_V), SpMat.eye(b.dim_V)
    gens = [kron(m, ib) for m in a.generators]
    gens += [kron(ia, m) for m in b.generators]
    keys = None
    if a.weight_keys and b.weight_keys:
        keys = tuple(ka + kb for ka in a.weight_keys for kb in b.weight_keys)
    return LieAction(a.dim_V * b.dim_V, gens, kron(a.gram, b.gram),
                     name=f"({a.name})(x)_R({b.name})", expr=expr,
                     weight_keys=keys, factors=("R", a, b),
                     embed=_vec_kron)


def direct_sum(a: LieAction, b: LieAction, expr=None) -> LieAction:
    """The same group acting diagonally on the sum of two modules."""
    assert len(a.generators) == len(b.generators), \
        "summands act by different groups"
    d1, d2 = a.dim_V, b.dim_V
    gens = []
    for X, Y in zip(a.generators, b.generators):
        m = SpMat(d1 + d2, d1 + d2)
        for (i, j), v in X.data.items():
            m[(i, j)] = v
        for (i, j), v in Y.data.items():
            m[(d1 + i, d1 + j)] = v
        gens.append(m)
    gram = SpMat(d1 + d2, d1 + d2)
    for (i, j), v in a.gram.data.items():
        gram[(i, j)] = v
    for (i, j), v in b.gram.data.items():
        gram[(d1 + i, d1 + j)] = v
    keys = None
    if a.weight_keys and b.weight_keys:
        keys = tuple(a.weight_keys) + tuple(b.weight_keys)
    return LieAction(d1 + d2, gens, gram,
                     name=f"({a.name})(+)({b.name})", expr=expr,
                     weight_keys=keys, factors=("Sum", a, b))


# ---------------------------------------------------------------------------
# building actions from expressions
# ---------------------------------------------------------------------------

def complexify(e) -> ComplexRep:
    """The complex-linear action of an expression that carries one."""
    if isinstance(e, Leaf):
        crep = leaf_complex(e.type, tuple(e.weight))
        rs = build_root_system(e.type)
        if fs_type(rs, e.weight) == REAL:
            raise TypeError(
                f"factor {e.type}:{list(e.weight)} is of real type and "
                "carries no invariant complex structure")
        return crep
    if isinstance(e, Circle):
        return circle_complex(e.charge)
    if isinstance(e, TorusRep):
        return torus_complex(e.characters)
    if isinstance(e, TensorC):
        return tensor_complex(complexify(e.left), complexify(e.right), expr=e)
    raise TypeError(f"expression has no complex structure: {e!r}")


_ACTION_CACHE = {}


def build_action(e) -> LieAction:
    """Construct the real orthogonal action of a representation expression."""
    if e in _ACTION_CACHE:
        return _ACTION_CACHE[e]
    a = _build_action(e)
    a.expr = e
    _ACTION_CACHE[e] = a
    return a


def _build_action(e) -> LieAction:
    if isinstance(e, Leaf):
        rs = build_root_system(e.type)
        ft = fs_type(rs, e.weight)
        crep = leaf_complex(e.type, tuple(e.weight))
        if ft == REAL:
            return real_form(crep, expr=e)
        return realify(crep, expr=e)
    if isinstance(e, (Circle, TorusRep)):
        return realify(complexify(e), expr=e)
    if isinstance(e, TensorC):
        ca, cb = complexify(e.left), complexify(e.right)
        fa = build_action(e.left)
        fb = build_action(e.right)
        emb = _complex_tensor_embed(ca.c, cb.c)
        def embed(v1, v2, _emb=emb):
            x, y = _emb(v1, v2)
            return x + y
        return realify(tensor_complex(ca, cb, expr=e), expr=e,
                       factors=("C", fa, fb), embed=embed)
    if isinstance(e, TensorH):
        ca, cb = complexify(e.left), complexify(e.right)
        if ca.s_sign != -1 or cb.s_sign != -1:
            raise TypeError("quaternionic tensor of non-quaternionic factors")
        fa = build_action(e.left)
        fb = build_action(e.right)
        prod = tensor_complex(ca, cb, expr=e)
        assert prod.s_sign == 1
        return real_form(prod, expr=e, factors=("H", fa, fb),
                         embed_complex=_complex_tensor_embed(ca.c, cb.c))
    if isinstance(e, TensorR):
        return tensor_real(build_action(e.left), build_action(e.right), expr=e)
    if isinstance(e, DirectSum):
        group_signature(e)
        return direct_sum(build_action(e.left), build_action(e.right), expr=e)
    raise TypeError(f"not a representation expression: {e!r}")


def quaternionic_structure(e) -> SpMat:
    """The antilinear structure J (acting on realified coordinates) of a
    quaternionic-type complex action, with J^2 = -identity."""
    crep = complexify(e)
    if crep.s_sign != -1:
        raise ValueError("action is not of quaternionic type")
    c, S = crep.c, crep.S
    J = SpMat(2 * c, 2 * c)
    for (i, j), v in S.data.items():
        J[(i, j)] = v          # J(x + iy) = S x - i S y
        J[(c + i, c + j)] = -v
    return J
