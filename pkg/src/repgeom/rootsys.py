"""Root systems, weights and the Weyl dimension formula.

Weights are always given by their Dynkin labels (coordinates in the
fundamental-weight basis), as integer tuples.  Simple-root coordinates are
used internally only.  The symmetrized inner product is normalized so that
short roots have squared length 2, which keeps all structure constants
integral.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .linalg import invert

FAMILIES = "ABCDEFG"


@dataclass(frozen=True)
class SimpleType:
    """A simple Lie type: family letter A-G plus rank."""
    family: str
    rank: int

    def __post_init__(self):
        f, n = self.family, self.rank
        ok = {
            "A": n >= 1, "B": n >= 2, "C": n >= 2, "D": n >= 3,
            "E": n in (6, 7, 8), "F": n == 4, "G": n == 2,
        }.get(f, False)
        if not ok:
            raise ValueError(f"invalid simple type {f}{n}")

    def __str__(self):
        return f"{self.family}{self.rank}"


def cartan_matrix(t: SimpleType):
    """Cartan matrix A with A[i][j] = 2(a_i, a_j)/(a_i, a_i), Bourbaki order."""
    f, n = t.family, t.rank
    A = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i, j, aij=-1, aji=-1):
        A[i][j] = aij
        A[j][i] = aji

    if f in "ABCF" or (f == "G"):
        for i in range(n - 1):
            link(i, i + 1)
    if f == "B":
        link(n - 2, n - 1, -1, -2)   # a_{n-1} long, a_n short
    elif f == "C":
        link(n - 2, n - 1, -2, -1)   # a_n long
    elif f == "D":
        A = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 3, n - 1)
    elif f == "E":
        # Bourbaki numbering: chain 1-3-4-5-6(-7-8), node 2 attached to 4
        A = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
        chain = [0, 2, 3, 4, 5, 6, 7][: n - 1]
        for a, b in zip(chain, chain[1:]):
            link(a, b)
        link(1, 3)
    elif f == "F":
        link(1, 2, -1, -2)           # a_1,a_2 long; a_3,a_4 short
    elif f == "G":
        link(0, 1, -3, -1)           # a_1 short, a_2 long
    return A


def _symmetrizer(t: SimpleType):
    """d_i = (a_i,a_i)/2, normalized so short roots have d = 1."""
    f, n = t.family, t.rank
    if f == "B":
        return [2] * (n - 1) + [1]
    if f == "C":
        return [1] * (n - 1) + [2]
    if f == "F":
        return [2, 2, 1, 1]
    if f == "G":
        return [1, 3]
    return [1] * n


@dataclass(frozen=True)
class RootSystemData:
    """Full root datum of a simple type."""
    type: SimpleType
    cartan: tuple                 # rank x rank integer Cartan matrix
    d: tuple                      # symmetrizer, (a_i,a_i)/2
    positive_roots: tuple         # tuples of simple-root coordinates
    weight_gram: tuple            # Gram matrix of fundamental weights (Fraction)
    rho: tuple                    # Weyl vector labels, all ones
    _wdim_cache: dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def rank(self):
        return self.type.rank

    @property
    def n_positive(self):
        return len(self.positive_roots)

    @property
    def group_dim(self):
        return self.rank + 2 * self.n_positive

    # -- coordinate conversions -------------------------------------------
    def root_labels(self, root):
        """Dynkin labels of a root given in simple-root coordinates."""
        A = self.cartan
        n = self.rank
        return tuple(sum(root[i] * A[j][i] for i in range(n)) for j in range(n))

    def root_norm2(self, root):
        """(a, a) for a root in simple-root coordinates."""
        s = 0
        n = self.rank
        for i in range(n):
            if not root[i]:
                continue
            for j in range(n):
                if root[j]:
                    s += root[i] * root[j] * self.d[i] * self.cartan[i][j]
        return s

    def ip(self, lam, mu):
        """Symmetrized inner product of two weights given by labels."""
        s = Fraction(0)
        n = self.rank
        for i in range(n):
            if not lam[i]:
                continue
            row = self.weight_gram[i]
            for j in range(n):
                if mu[j]:
                    s += lam[i] * mu[j] * row[j]
        return s

    def pairing(self, lam, root):
        """<lam, root^vee> = 2(lam, a)/(a, a) for a positive root."""
        lab = self.root_labels(root)
        num = Fraction(0)
        n = self.rank
        # (lam, a) = sum_i lam_i (w_i, a) = sum_i lam_i c_i d_i  where a = sum c_i a_i
        # since (w_i, a_j) = d_j delta_ij.
        for i in range(n):
            if lam[i] and root[i]:
                num += lam[i] * root[i] * self.d[i]
        return 2 * num / self.root_norm2(root)

    def reflect(self, lam, i):
        """Simple reflection s_i acting on labels."""
        li = lam[i]
        A = self.cartan
        return tuple(lam[j] - li * A[j][i] for j in range(self.rank))

    def highest_root(self):
        """The highest root, in simple-root coordinates."""
        return max(self.positive_roots, key=lambda r: sum(r))


def _positive_roots(A, n):
    """Generate positive roots by the standard root-string closure."""
    roots = {tuple(1 if j == i else 0 for j in range(n)) for i in range(n)}
    frontier = list(roots)
    while frontier:
        new = []
        for r in frontier:
            for i in range(n):
                # pairing <r, a_i^vee> = sum_j r_j A[i][j]
                pair = sum(r[j] * A[i][j] for j in range(n) if r[j])
                # back string length p = max k with r - k a_i a (positive) root
                p = 0
                back = list(r)
                while True:
                    back[i] -= 1
                    if tuple(back) in roots:
                        p += 1
                    else:
                        break
                # r + a_i is a root iff the forward string is nonempty: q = p - pair > 0
                if p - pair > 0:
                    ft = r[:i] + (r[i] + 1,) + r[i + 1:]
                    if ft not in roots:
                        roots.add(ft)
                        new.append(ft)
        frontier = new
    return sorted(roots, key=lambda r: (sum(r), r))


@lru_cache(maxsize=None)
def build_root_system(t: SimpleType) -> RootSystemData:
    """Construct the full root datum for a simple type."""
    n = t.rank
    A = cartan_matrix(t)
    d = _symmetrizer(t)
    pos = _positive_roots(A, n)
    # Gram matrix of fundamental weights: (w_i, w_j).
    # With labels l = A r (r = simple-root coords), (lam,mu) = r^T S s,
    # S_ij = d_i A_ij; so Gram = A^{-T} S A^{-1}; here w_i has labels e_i.
    Ainv = invert(A)
    gram = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            s = Fraction(0)
            for k in range(n):
                for l in range(n):
                    s += Ainv[k][i] * d[k] * A[k][l] * Ainv[l][j]
            gram[i][j] = s
    return RootSystemData(
        type=t,
        cartan=tuple(tuple(row) for row in A),
        d=tuple(d),
        positive_roots=tuple(pos),
        weight_gram=tuple(tuple(row) for row in gram),
        rho=tuple([1] * n),
    )


def is_dominant(lam):
    return all(x >= 0 for x in lam)


def weyl_dim(rs: RootSystemData, lam) -> int:
    """Complex dimension of the irrep with highest weight lam (Weyl formula)."""
    lam = tuple(lam)
    if not is_dominant(lam):
        raise ValueError(f"weight {lam} is not dominant")
    cached = rs._wdim_cache.get(lam)
    if cached is not None:
        return cached
    num = Fraction(1)
    rho = rs.rho
    lam_rho = tuple(a + 1 for a in lam)
    for root in rs.positive_roots:
        num *= rs.pairing(lam_rho, root) / rs.pairing(rho, root)
    assert num.denominator == 1
    val = int(num)
    rs._wdim_cache[lam] = val
    return val


def dominant_weights_up_to_dim(rs: RootSystemData, maxdim: int):
    """All dominant weights with Weyl dimension <= maxdim.

    The set is downward closed in the coordinatewise order because the
    dimension is strictly increasing in each Dynkin label, so a BFS with
    pruning enumerates it exactly.
    """
    if maxdim < 1:
        raise ValueError("maxdim must be >= 1")
    n = rs.rank
    zero = tuple([0] * n)
    found = {zero: 1}
    frontier = [zero]
    while frontier:
        new = []
        for lam in frontier:
            for i in range(n):
                nxt = lam[:i] + (lam[i] + 1,) + lam[i + 1:]
                if nxt in found:
                    continue
                dim = weyl_dim(rs, nxt)
                if dim <= maxdim:
                    found[nxt] = dim
                    new.append(nxt)
        frontier = new
    return sorted(found, key=lambda w: (found[w], w))


def longest_element_dual(rs: RootSystemData, lam):
    """-w0(lam): the highest weight of the dual representation."""
    lam = tuple(lam)
    if not is_dominant(lam):
        raise ValueError(f"weight {lam} is not dominant")
    mu = lam
    # push to the antidominant chamber with simple reflections
    while True:
        for i in range(rs.rank):
            if mu[i] > 0:
                mu = rs.reflect(mu, i)
                break
        else:
            break
    return tuple(-x for x in mu)
