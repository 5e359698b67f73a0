"""Exact rational linear algebra.

Everything in this package that looks like numerics is done over the
rationals (``fractions.Fraction``); ranks and kernels are computed with
fraction-free (Bareiss) elimination on integer matrices, so there is no
tolerance parameter anywhere.  gmpy2 integers are used inside the
elimination loops because intermediate entries are minors and grow large.

Matrices are plain lists of lists.  Sparse matrices (used for the large
generator matrices, which are weight-graded and therefore very sparse)
are dicts mapping ``(i, j) -> Fraction`` wrapped in :class:`SpMat`.
"""

from fractions import Fraction
from math import gcd

import gmpy2

_MPZ = gmpy2.mpz

ZERO = Fraction(0)
ONE = Fraction(1)


# ---------------------------------------------------------------------------
# sparse matrices
# ---------------------------------------------------------------------------

class SpMat:
    """A sparse matrix over Fraction: data maps (row, col) -> nonzero entry."""

    __slots__ = ("nrows", "ncols", "data")

    def __init__(self, nrows, ncols, data=None):
        self.nrows = nrows
        self.ncols = ncols
        self.data = {} if data is None else data

    @classmethod
    def eye(cls, n, scale=ONE):
        s = Fraction(scale)
        d = {(i, i): s for i in range(n)} if s else {}
        return cls(n, n, d)

    def __getitem__(self, ij):
        return self.data.get(ij, ZERO)

    def __setitem__(self, ij, val):
        if val:
            self.data[ij] = val
        else:
            self.data.pop(ij, None)

    def copy(self):
        return SpMat(self.nrows, self.ncols, dict(self.data))

    def __add__(self, other):
        out = dict(self.data)
        for ij, v in other.data.items():
            w = out.get(ij, ZERO) + v
            if w:
                out[ij] = w
            else:
                out.pop(ij, None)
        return SpMat(self.nrows, self.ncols, out)

    def __sub__(self, other):
        out = dict(self.data)
        for ij, v in other.data.items():
            w = out.get(ij, ZERO) - v
            if w:
                out[ij] = w
            else:
                out.pop(ij, None)
        return SpMat(self.nrows, self.ncols, out)

    def __neg__(self):
        return SpMat(self.nrows, self.ncols, {ij: -v for ij, v in self.data.items()})

    def scale(self, c):
        c = Fraction(c)
        if not c:
            return SpMat(self.nrows, self.ncols)
        return SpMat(self.nrows, self.ncols, {ij: c * v for ij, v in self.data.items()})

    def __mul__(self, other):
        """Sparse matrix product self @ other."""
        assert self.ncols == other.nrows
        rows = {}
        for (i, k), v in self.data.items():
            rows.setdefault(k, []).append((i, v))
        out = {}
        for (k, j), w in other.data.items():
            for i, v in rows.get(k, ()):
                ij = (i, j)
                s = out.get(ij, ZERO) + v * w
                if s:
                    out[ij] = s
                else:
                    out.pop(ij, None)
        return SpMat(self.nrows, other.ncols, out)

    def comm(self, other):
        """Commutator [self, other]."""
        return self * other - other * self

    def transpose(self):
        return SpMat(self.ncols, self.nrows,
                     {(j, i): v for (i, j), v in self.data.items()})

    def apply(self, vec):
        """Matrix-vector product; vec is a list of Fractions."""
        out = [ZERO] * self.nrows
        for (i, j), v in self.data.items():
            x = vec[j]
            if x:
                out[i] += v * x
        return out

    def to_dense(self):
        m = [[ZERO] * self.ncols for _ in range(self.nrows)]
        for (i, j), v in self.data.items():
            m[i][j] = v
        return m

    def is_zero(self):
        return not self.data

    def __eq__(self, other):
        return (self.nrows == other.nrows and self.ncols == other.ncols
                and self.data == other.data)

    def is_skew_wrt(self, gram):
        """Check X^T G + G X == 0 exactly (G a SpMat)."""
        return (self.transpose() * gram + gram * self).is_zero()

    def conjugate_by(self, p, p_inv):
        """Return p_inv @ self @ p (change of basis by column matrix p)."""
        return p_inv * (self * p)


def kron(a, b):
    """Kronecker product of two SpMats."""
    out = {}
    nb, mb = b.nrows, b.ncols
    for (i, j), v in a.data.items():
        for (k, l), w in b.data.items():
            out[(i * nb + k, j * mb + l)] = v * w
    return SpMat(a.nrows * nb, a.ncols * mb, out)


# ---------------------------------------------------------------------------
# dense exact elimination
# ---------------------------------------------------------------------------

def _integer_rows(rows):
    """Scale each row of a Fraction/int matrix to a primitive integer row."""
    out = []
    for row in rows:
        den = 1
        for x in row:
            if isinstance(x, Fraction):
                den = den * x.denominator // gcd(den, x.denominator)
        ints = [int(x * den) if isinstance(x, Fraction) else int(x) * den
                for x in row]
        g = 0
        for x in ints:
            g = gcd(g, x)
            if g == 1:
                break
        if g > 1:
            ints = [x // g for x in ints]
        out.append([_MPZ(x) for x in ints])
    return out


def bareiss_echelon(rows):
    """Fraction-free row echelon form of an integer matrix.

    Returns (echelon_rows, pivot_cols).  Input rows are gmpy2 integers
    (use :func:`_integer_rows` first for rational input); the echelon
    rows are exact integer rows, one per pivot.
    """
    m = [row[:] for row in rows]
    n = len(m)
    if n == 0:
        return [], []
    ncols = len(m[0])
    prev = _MPZ(1)
    pr = 0
    pivots = []
    for pc in range(ncols):
        piv_row = None
        for r in range(pr, n):
            if m[r][pc]:
                piv_row = r
                break
        if piv_row is None:
            continue
        if piv_row != pr:
            m[pr], m[piv_row] = m[piv_row], m[pr]
        piv = m[pr][pc]
        for r in range(pr + 1, n):
            mr = m[r]
            mp = m[pr]
            t = mr[pc]
            if t:
                for c in range(pc + 1, ncols):
                    mr[c] = (piv * mr[c] - t * mp[c]) // prev
                mr[pc] = _MPZ(0)
            else:
                for c in range(pc + 1, ncols):
                    mr[c] = (piv * mr[c]) // prev
        prev = piv
        pivots.append(pc)
        pr += 1
        if pr == n:
            break
    return m[:pr], pivots


def rank(rows):
    """Exact rank of a matrix with Fraction/int entries."""
    if not rows:
        return 0
    _, pivots = bareiss_echelon(_integer_rows(rows))
    return len(pivots)


def nullspace(rows, ncols=None):
    """Exact right-kernel basis of a Fraction/int matrix.

    Returns a list of Fraction vectors spanning {x : A x = 0}.
    """
    if not rows:
        return [unit_vector(ncols, i) for i in range(ncols or 0)]
    ncols = len(rows[0])
    ech, pivots = bareiss_echelon(_integer_rows(rows))
    pivset = set(pivots)
    free = [c for c in range(ncols) if c not in pivset]
    basis = []
    for fc in free:
        x = [ZERO] * ncols
        x[fc] = ONE
        # back substitution over the echelon rows
        for r in range(len(pivots) - 1, -1, -1):
            pc = pivots[r]
            row = ech[r]
            s = ZERO
            for c in range(pc + 1, ncols):
                if x[c]:
                    s += Fraction(int(row[c])) * x[c]
            x[pc] = -s / Fraction(int(row[pc]))
        basis.append(x)
    return basis


def row_space_contains(rows, vec):
    """True iff vec lies in the row span of the given rows (exact)."""
    r0 = rank(rows)
    return rank(list(rows) + [vec]) == r0


def solve_upper(rows, rhs):
    """Solve a small square system A x = b over Q by Gaussian elimination.

    rows must be square and nonsingular.
    """
    n = len(rows)
    m = [[Fraction(x) for x in row] + [Fraction(rhs[i])] for i, row in enumerate(rows)]
    for c in range(n):
        piv = None
        for r in range(c, n):
            if m[r][c]:
                piv = r
                break
        if piv is None:
            raise ValueError("singular system")
        m[c], m[piv] = m[piv], m[c]
        pv = m[c][c]
        for r in range(n):
            if r != c and m[r][c]:
                f = m[r][c] / pv
                for k in range(c, n + 1):
                    m[r][k] -= f * m[c][k]
    return [m[i][n] / m[i][i] for i in range(n)]


def invert(rows):
    """Exact inverse of a small square Fraction matrix."""
    n = len(rows)
    m = [[Fraction(x) for x in row] + [ONE if i == j else ZERO for j in range(n)]
         for i, row in enumerate(rows)]
    for c in range(n):
        piv = None
        for r in range(c, n):
            if m[r][c]:
                piv = r
                break
        if piv is None:
            raise ValueError("singular matrix")
        m[c], m[piv] = m[piv], m[c]
        pv = m[c][c]
        m[c] = [x / pv for x in m[c]]
        for r in range(n):
            if r != c and m[r][c]:
                f = m[r][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return [row[n:] for row in m]


def unit_vector(n, i):
    v = [ZERO] * n
    v[i] = ONE
    return v


def dot(u, v):
    s = ZERO
    for a, b in zip(u, v):
        if a and b:
            s += a * b
    return s


def gram_dot(u, gram, v):
    """u^T G v for a sparse gram matrix."""
    s = ZERO
    for (i, j), g in gram.data.items():
        a = u[i]
        b = v[j]
        if a and b:
            s += a * g * b
    return s


def vec_add(u, v):
    return [a + b for a, b in zip(u, v)]


def vec_sub(u, v):
    return [a - b for a, b in zip(u, v)]


def vec_scale(u, c):
    c = Fraction(c)
    return [c * a for a in u]


def is_zero_vec(u):
    return all(not a for a in u)


# ---------------------------------------------------------------------------
# incremental rational elimination (for sparse structured solves)
# ---------------------------------------------------------------------------

class IncrementalKernel:
    """Maintains the kernel of a growing set of linear constraints over Q.

    Feed constraint rows (length-n Fraction vectors); `kernel()` returns a
    basis of the common kernel.  Used to solve the equivariance systems for
    real/quaternionic structures and invariant bilinear forms, where the
    number of unknowns is modest but constraints are streamed.
    """

    def __init__(self, n):
        self.n = n
        self.rows = []      # reduced rows
        self.pivots = []    # pivot column per reduced row

    def add(self, row):
        row = list(row)
        for r, pc in zip(self.rows, self.pivots):
            if row[pc]:
                f = row[pc] / r[pc]
                for c in range(self.n):
                    if r[c]:
                        row[c] -= f * r[c]
        for c in range(self.n):
            if row[c]:
                self.rows.append(row)
                self.pivots.append(c)
                return True
        return False

    def rank(self):
        return len(self.rows)

    def kernel(self):
        pivset = set(self.pivots)
        order = sorted(range(len(self.pivots)), key=lambda i: self.pivots[i])
        basis = []
        for fc in range(self.n):
            if fc in pivset:
                continue
            x = [ZERO] * self.n
            x[fc] = ONE
            for i in reversed(order):
                pc = self.pivots[i]
                row = self.rows[i]
                s = ZERO
                for c in range(pc + 1, self.n):
                    if x[c] and row[c]:
                        s += row[c] * x[c]
                x[pc] = -s / row[pc]
            basis.append(x)
        return basis
