"""Command-line surface: a small DSL for representation expressions,
analysis commands, and table emitters.

Grammar (whitespace-insensitive)::

    expr    := atom (combinator atom)*          combinators left-associative
    atom    := group [':' repspec] | '(' expr ')'
    group   := 'SO' '(' n ')' | 'SU' '(' n ')' | 'SP' '(' n ')'
             | 'Spin' '(' n ')' | 'U' '(' 1 ')'
             | 'G2' | 'F4' | 'E6' | 'E7' | 'E8'
    repspec := '[' n (',' n)* ']'               explicit Dynkin labels
             | 'R^m' | 'C^m' | 'Q^m'            module of that (real/complex/
                                                 quaternionic) dimension
             | 'Lambda^k' | 'S^k' | 'S^2_0' | 'adjoint' | 'spin'
    combinator := '(x)_R' | '(x)_C' | '(x)_H' | '(+)'

Sugar elaborates to explicit highest weights before any matrix is built.
"""

import argparse
import re
import sys
from fractions import Fraction

from . import cases, classify, geometry
from .geometry import DEFAULT_SAMPLES, DEFAULT_SEED
from .irrepmeta import COMPLEX, QUATERNIONIC, REAL, fs_type, real_dim
from .linalg import SpMat
from .matrep import (Circle, DirectSum, Leaf, TensorC, TensorH, TensorR,
                     TorusRep, build_action)
from .rootsys import (SimpleType, build_root_system,
                      dominant_weights_up_to_dim, longest_element_dual,
                      weyl_dim)


class RepSyntaxError(ValueError):
    def __init__(self, message, pos):
        super().__init__(f"syntax error at byte {pos}: {message}")
        self.pos = pos


class RepTypeError(TypeError):
    def __init__(self, message, fragment):
        super().__init__(f"type error in `{fragment}`: {message}")
        self.fragment = fragment


# ---------------------------------------------------------------------------
# lexer
# ---------------------------------------------------------------------------

_TOKEN_RES = (
    ("TENSOR", re.compile(r"\(x\)_[RCH]")),
    ("OPLUS", re.compile(r"\(\+\)")),
    ("NAME", re.compile(r"[A-Za-z][A-Za-z0-9]*(\^[0-9]+)?(_0)?")),
    ("NUM", re.compile(r"[0-9]+")),
    ("SYM", re.compile(r"[():,\[\]]")),
)


def _tokenize(text):
    tokens = []
    i = 0
    while i < len(text):
        if text[i].isspace():
            i += 1
            continue
        for kind, rx in _TOKEN_RES:
            m = rx.match(text, i)
            if m:
                tokens.append((kind, m.group(0), i))
                i = m.end()
                break
        else:
            raise RepSyntaxError(f"unexpected character {text[i]!r}", i)
    tokens.append(("EOF", "", len(text)))
    return tokens


# ---------------------------------------------------------------------------
# group heads and integrality
# ---------------------------------------------------------------------------

_EXCEPTIONAL = {"G2": SimpleType("G", 2), "F4": SimpleType("F", 4),
                "E6": SimpleType("E", 6), "E7": SimpleType("E", 7),
                "E8": SimpleType("E", 8)}


def _so_integral(head, t, w):
    """Whether the weight lifts to the non-simply-connected group SO(n)."""
    if head != "SO":
        return True
    if t.family == "A" and t.rank == 1:
        return w[0] % 2 == 0
    if t.family == "A" and t.rank == 3:          # SO6 = SU4 / {+-1}
        return (w[0] + w[2]) % 2 == 0
    if t.family == "B":
        return w[-1] % 2 == 0
    if t.family == "D":
        return (w[-1] + w[-2]) % 2 == 0
    return True


def _group_type(head, n, frag):
    """The simple type behind an SO/SU/SP/Spin head (SO(2)/SO(4) are
    handled separately by the caller)."""
    if head == "SU":
        if n < 2:
            raise RepTypeError("SU(n) needs n >= 2", frag)
        return SimpleType("A", n - 1)
    if head == "SP":
        if n == 1:
            return SimpleType("A", 1)
        if n == 2:
            return SimpleType("B", 2)            # SP2 = Spin5
        return SimpleType("C", n)
    if n == 3:
        return SimpleType("A", 1)
    if n == 5:
        return SimpleType("B", 2)
    if n == 6:
        return SimpleType("A", 3)
    if n < 5:
        raise RepTypeError(f"{head}({n}) is not simple", frag)
    if n % 2:
        return SimpleType("B", (n - 1) // 2)
    return SimpleType("D", n // 2)


def _translate_labels(head, n, labels, frag):
    """Map user-facing Dynkin labels onto the internal simple type."""
    t = _group_type(head, n, frag)
    if head == "SP" and n == 2:
        if len(labels) != 2:
            raise RepTypeError("SP(2) takes 2 labels", frag)
        w = (labels[1], labels[0])               # C2 convention -> B2
    elif head in ("SO", "Spin") and n == 6:
        if len(labels) != 3:
            raise RepTypeError(f"{head}(6) takes 3 labels", frag)
        w = (labels[1], labels[0], labels[2])    # D3 convention -> A3
    else:
        if len(labels) != t.rank:
            raise RepTypeError(f"{head}({n}) takes {t.rank} labels", frag)
        w = tuple(labels)
    if not any(w):
        raise RepTypeError("trivial module", frag)
    if not _so_integral(head, t, w):
        raise RepTypeError(
            f"labels {list(labels)} define a module of the double cover "
            f"Spin({n}), not of SO({n})", frag)
    return t, w


# ---------------------------------------------------------------------------
# sugar elaboration
# ---------------------------------------------------------------------------

def _search_by_dim(head, t, target_real_dim, want_types, frag):
    """Unique dominant weight with the requested real dimension and
    Frobenius-Schur type; lex-max representative of its canonical class."""
    rs = build_root_system(t)
    classes = {}
    for w in dominant_weights_up_to_dim(rs, target_real_dim):
        if not any(w):
            continue
        if fs_type(rs, w) not in want_types:
            continue
        if real_dim(rs, w) != target_real_dim:
            continue
        if not _so_integral(head, t, w):
            continue
        key = classify.canonical_weight(t, w)
        classes.setdefault(key, []).append(w)
    if not classes:
        raise RepTypeError("no module of that dimension and type", frag)
    if len(classes) > 1:
        raise RepTypeError(
            "ambiguous dimension; use explicit Dynkin labels", frag)
    return max(next(iter(classes.values())))


def _fundamental(t, k, frag):
    if not 1 <= k <= t.rank:
        raise RepTypeError(f"index {k} out of range", frag)
    return tuple(1 if i == k - 1 else 0 for i in range(t.rank))


def _elaborate_sugar(head, n, t, sugar, frag):
    rs = build_root_system(t)
    m = re.fullmatch(r"([A-Za-z]+)(?:\^([0-9]+))?(_0)?", sugar)
    if not m:
        raise RepTypeError(f"unknown module specifier {sugar!r}", frag)
    name, power, sub0 = m.group(1), m.group(2), m.group(3)
    power = int(power) if power else None
    if name == "R" and power and not sub0:
        return _search_by_dim(head, t, power, (REAL,), frag)
    if name == "C" and power and not sub0:
        return _search_by_dim(head, t, 2 * power,
                              (COMPLEX, QUATERNIONIC), frag)
    if name == "Q" and power and not sub0:
        return _search_by_dim(head, t, 4 * power, (QUATERNIONIC,), frag)
    if name == "Lambda" and power and not sub0 or \
            name == "Lambda" and power and sub0:
        k = power
        if head == "SU":
            if not 1 <= k <= n - 1:
                raise RepTypeError(f"Lambda^{k} of C^{n} vanishes", frag)
            return _fundamental(t, k, frag)
        if head == "SP":
            if n == 2:
                return (0, 1) if k == 1 else (1, 0) if k == 2 else \
                    _raise(RepTypeError(f"Lambda^{k} out of range", frag))
            return _fundamental(t, k, frag)
        if head in ("SO", "Spin"):
            if t.family == "A" and t.rank == 1 and k == 1:
                return (2,)
            if t.family == "A" and t.rank == 3:
                if k == 1:
                    return (0, 1, 0)
                if k == 2:
                    return (1, 0, 1)             # Lambda^2 R^6 = adjoint
            if t.family == "B":
                if 1 <= k < t.rank:
                    return _fundamental(t, k, frag)
                if k == t.rank:                  # Lambda^r R^(2r+1) = 2 w_r
                    return tuple(0 if i < t.rank - 1 else 2
                                 for i in range(t.rank))
            if t.family == "D":
                if 1 <= k <= t.rank - 2:
                    return _fundamental(t, k, frag)
                if k == t.rank - 1:              # w_(r-1) + w_r
                    return tuple(0 if i < t.rank - 2 else 1
                                 for i in range(t.rank))
            raise RepTypeError(
                f"Lambda^{k} R^{n} is not irreducible here; use "
                "explicit labels", frag)
        raise RepTypeError("Lambda^k needs a classical group", frag)
    if name == "S" and power == 2 and sub0:
        if head == "SO":
            if t.family == "A" and t.rank == 1:
                return (4,)
            if t.family == "A" and t.rank == 3:
                return (0, 2, 0)
            return tuple([2] + [0] * (t.rank - 1))
        raise RepTypeError("S^2_0 is the traceless square of SO(n)", frag)
    if name == "S" and power and not sub0:
        if head == "SO":
            raise RepTypeError("the symmetric square of SO(n) is reducible; "
                               "did you mean S^2_0?", frag)
        if head == "SP" and n == 2:
            return (0, power)
        if t.rank == 1:
            return (power,)
        return tuple([power] + [0] * (t.rank - 1))
    if name == "adjoint" and not power:
        w = tuple(rs.root_labels(rs.highest_root()))
        if not _so_integral(head, t, w):
            raise RepTypeError("adjoint module is not SO-integral?", frag)
        return w
    if name == "spin" and not power:
        if head != "Spin" or t.family not in ("B", "D"):
            raise RepTypeError("spin modules need a Spin(n) head", frag)
        return tuple(1 if i == t.rank - 1 else 0 for i in range(t.rank))
    raise RepTypeError(f"unknown module specifier {sugar!r}", frag)


def _raise(err):
    raise err


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value):
        kind, val, pos = self.next()
        if val != value:
            raise RepSyntaxError(f"expected {value!r}, found {val!r}", pos)
        return pos

    def parse(self):
        expr, _ = self.expr()
        kind, val, pos = self.peek()
        if kind != "EOF":
            raise RepSyntaxError(f"unexpected {val!r}", pos)
        return expr

    def expr(self):
        node, frag = self.atom()
        while True:
            kind, val, pos = self.peek()
            if kind == "TENSOR":
                self.next()
                rhs, rfrag = self.atom()
                node = self._combine(val[-1], node, rhs, frag, rfrag, pos)
                frag = f"{frag} {val} {rfrag}"
            elif kind == "OPLUS":
                self.next()
                rhs, rfrag = self.atom()
                node = DirectSum(node, rhs)
                frag = f"{frag} (+) {rfrag}"
            else:
                return node, frag

    def _combine(self, field, lhs, rhs, lfrag, rfrag, pos):
        lt, rt = _expr_fs(lhs), _expr_fs(rhs)
        if field == "H":
            for t, frag in ((lt, lfrag), (rt, rfrag)):
                if t != QUATERNIONIC:
                    raise RepTypeError(
                        "(x)_H needs quaternionic-type factors", frag)
            return TensorH(lhs, rhs)
        if field == "C":
            for t, frag in ((lt, lfrag), (rt, rfrag)):
                if t == REAL:
                    raise RepTypeError(
                        "(x)_C needs complex- or quaternionic-type factors",
                        frag)
            return TensorC(lhs, rhs)
        if lt != REAL and rt != REAL:
            raise RepTypeError(
                "(x)_R of two non-real-type factors is reducible",
                f"{lfrag} (x)_R {rfrag}")
        return TensorR(lhs, rhs)

    def atom(self):
        kind, val, pos = self.peek()
        if val == "(":
            self.next()
            node, frag = self.expr()
            self.expect(")")
            return node, f"({frag})"
        if kind != "NAME":
            raise RepSyntaxError(f"expected a group name, found {val!r}", pos)
        self.next()
        head = val
        if head in _EXCEPTIONAL:
            return self._with_repspec(head, None, _EXCEPTIONAL[head],
                                      head, pos)
        if head not in ("SO", "SU", "SP", "Spin", "U"):
            raise RepSyntaxError(f"unknown group {head!r}", pos)
        self.expect("(")
        nkind, nval, npos = self.next()
        if nkind != "NUM":
            raise RepSyntaxError("expected a number", npos)
        n = int(nval)
        self.expect(")")
        frag = f"{head}({n})"
        if head == "U":
            if n != 1:
                raise RepSyntaxError("only U(1) is a primitive group atom; "
                                     "build U(n) as SU(n) (x)_C U(1)", npos)
            return Circle(1), frag
        if head == "SO" and n == 2:
            return self._so2(frag)
        if head == "SO" and n == 4:
            return self._so4(frag)
        return self._with_repspec(head, n, _group_type(head, n, frag),
                                  frag, pos)

    def _repspec(self, frag):
        """Parse `: labels-or-sugar`; returns None if absent."""
        if self.peek()[1] != ":":
            raise RepSyntaxError(f"expected ':' and a module specifier "
                                 f"after {frag}", self.peek()[2])
        self.next()
        kind, val, pos = self.peek()
        if val == "[":
            self.next()
            labels = []
            while True:
                nkind, nval, npos = self.next()
                if nkind != "NUM":
                    raise RepSyntaxError("expected a label", npos)
                labels.append(int(nval))
                kind2, val2, pos2 = self.next()
                if val2 == "]":
                    return ("labels", labels)
                if val2 != ",":
                    raise RepSyntaxError("expected ',' or ']'", pos2)
        if kind != "NAME":
            raise RepSyntaxError("expected a module specifier", pos)
        self.next()
        return ("sugar", val)

    def _with_repspec(self, head, n, t, frag, pos):
        spec = self._repspec(frag)
        if spec[0] == "labels":
            t2, w = _translate_labels(head if n else "Spin", n or 0,
                                      spec[1], frag) if n else \
                (t, self._exc_labels(t, spec[1], frag))
            return Leaf(t2, w), f"{frag}:{list(spec[1])}"
        w = _elaborate_sugar(head if n else head, n, t, spec[1],
                             f"{frag}:{spec[1]}")
        return Leaf(t, w), f"{frag}:{spec[1]}"

    def _exc_labels(self, t, labels, frag):
        if len(labels) != t.rank:
            raise RepTypeError(f"{t.family}{t.rank} takes {t.rank} labels",
                               frag)
        if not any(labels):
            raise RepTypeError("trivial module", frag)
        return tuple(labels)

    def _so2(self, frag):
        spec = self._repspec(frag)
        if spec != ("sugar", "R^2"):
            raise RepTypeError("SO(2) supports only R^2", frag)
        return TorusRep(((1,),)), f"{frag}:R^2"

    def _so4(self, frag):
        spec = self._repspec(frag)
        if spec == ("sugar", "R^4"):
            a = b = 1
        elif spec[0] == "labels" and len(spec[1]) == 2:
            a, b = spec[1]
        else:
            raise RepTypeError("SO(4) supports R^4 or two A1 labels", frag)
        if not (a or b):
            raise RepTypeError("trivial module", frag)
        la, lb = Leaf(SimpleType("A", 1), (a,)), Leaf(SimpleType("A", 1), (b,))
        if a % 2 == 1 and b % 2 == 1:
            return TensorH(la, lb), frag
        if a % 2 == 0 and b % 2 == 0:
            if a == 0:
                return lb, frag
            if b == 0:
                return la, frag
            return TensorR(la, lb), frag
        raise RepTypeError(
            f"labels [{a},{b}] define a module of Spin(4), not SO(4)", frag)


def _expr_fs(expr):
    """Frobenius-Schur type of a (sub)expression's commutant."""
    if isinstance(expr, Leaf):
        return fs_type(build_root_system(expr.type), expr.weight)
    if isinstance(expr, (Circle, TorusRep)):
        return COMPLEX
    if isinstance(expr, TensorR):
        kinds = {_expr_fs(expr.left), _expr_fs(expr.right)} - {REAL}
        return kinds.pop() if kinds else REAL
    if isinstance(expr, TensorC):
        return COMPLEX
    if isinstance(expr, TensorH):
        return REAL
    if isinstance(expr, DirectSum):
        return REAL                              # commutant is not a field
    raise TypeError(f"unknown expression node {expr!r}")


def parse_rep(text):
    """Parse a representation expression; returns a matrep expression."""
    return _Parser(text).parse()


# ---------------------------------------------------------------------------
# pretty-printer
# ---------------------------------------------------------------------------

_HEADS = {"A": lambda r: f"SU({r + 1})", "B": lambda r: f"Spin({2 * r + 1})",
          "C": lambda r: f"SP({r})", "D": lambda r: f"Spin({2 * r})",
          "G": lambda r: "G2", "F": lambda r: "F4", "E": lambda r: f"E{r}"}


def print_rep(expr, _top=True):
    """Canonical DSL text with explicit Dynkin labels (reparses to an
    equal expression)."""
    if isinstance(expr, Leaf):
        t = expr.type
        head = _HEADS[t.family](t.rank)
        if t.family in ("G", "F", "E"):
            return f"{head}:[{','.join(map(str, expr.weight))}]"
        w = expr.weight
        if t.family == "C":                      # internal C-rank >= 3
            pass
        if t.family == "B" and t.rank == 2:
            head, w = "SP(2)", (w[1], w[0])
        if t.family == "A" and t.rank >= 2:
            head = f"SU({t.rank + 1})"
        return f"{head}:[{','.join(map(str, w))}]"
    if isinstance(expr, Circle):
        return "U(1)"
    if isinstance(expr, TorusRep):
        if expr.characters == ((1,),):
            return "SO(2):R^2"
        raise ValueError("general torus modules have no DSL form")
    for cls, op in ((TensorR, "(x)_R"), (TensorC, "(x)_C"),
                    (TensorH, "(x)_H"), (DirectSum, "(+)")):
        if isinstance(expr, cls):
            l = print_rep(expr.left, _top=False)
            r = print_rep(expr.right, _top=False)
            s = f"{l} {op} {r}"
            return s if _top else f"({s})"
    raise TypeError(f"unknown expression node {expr!r}")


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def _read_matrix(path):
    with open(path) as fh:
        parts = fh.read().split()
    rows, cols = int(parts[0]), int(parts[1])
    vals = [Fraction(p) for p in parts[2:]]
    if len(vals) != rows * cols:
        raise ValueError(f"expected {rows * cols} entries, got {len(vals)}")
    m = SpMat(rows, cols)
    for i in range(rows):
        for j in range(cols):
            if vals[i * cols + j]:
                m[(i, j)] = vals[i * cols + j]
    return m


def _cmd_info(args, out):
    expr = parse_rep(args.expr)
    a = build_action(expr)
    print(f"expression: {print_rep(expr)}", file=out)
    print(f"dim V: {a.dim_V}", file=out)
    print(f"dim G: {a.group_dim}", file=out)
    return 0


def _cmd_cohom(args, out):
    a = build_action(parse_rep(args.expr))
    print(geometry.cohomogeneity(a, args.seed, args.samples), file=out)
    return 0


def _cmd_polar(args, out):
    a = build_action(parse_rep(args.expr))
    print("yes" if geometry.is_polar(a, args.seed) else "no", file=out)
    return 0


def _cmd_copolarity(args, out):
    rep = geometry.analyze(build_action(parse_rep(args.expr)), args.seed)
    if rep.polar:
        print("0 (polar)", file=out)
    elif rep.copolarity_upper is not None:
        print(f"<= {rep.copolarity_upper}", file=out)
    elif rep.boundary == geometry.BOUNDARY_NO:
        print("trivial", file=out)
    else:
        print("unknown", file=out)
    return 0


def _cmd_boundary(args, out):
    rep = geometry.analyze(build_action(parse_rep(args.expr)), args.seed)
    print(rep.boundary, file=out)
    return 0


def _cmd_classify(args, out):
    rows = classify.classify_tables(args.cohom, args.seed)
    emit = {"json": classify.to_json, "csv": classify.to_csv,
            "md": classify.to_text}[args.format]
    out.write(emit(rows))
    return 0


def _cmd_tables(args, out):
    code = 0
    for target in (4, 5):
        rows = classify.classify_tables(target, args.seed)
        diff = classify.compare_to_reference(
            rows, classify.reference_table(target))
        if diff["match"]:
            print(f"cohomogeneity {target}: {len(rows)} rows verified",
                  file=out)
        else:
            code = 1
            print(f"cohomogeneity {target}: MISMATCH", file=out)
            for kind in ("missing", "extra", "mismatched"):
                for item in diff[kind]:
                    print(f"  {kind}: {item}", file=out)
    return code


def _cmd_torus_case(args, out):
    rec = cases.verify_torus_case(args.k)
    print(f"cohom {rec['cohom']}", file=out)
    print("boundary: certified-no" if rec["no_boundary"]
          else "boundary: unknown", file=out)
    ok = rec["cohom"] == rec["cohom_expected"] and rec["no_boundary"] \
        and rec["l_equals_k_plus_1"]
    return 0 if ok else 1


def _cmd_audit(args, out):
    a = build_action(parse_rep(args.expr))
    w = _read_matrix(args.matrix)
    rec = geometry.involution_audit(a, w)
    print(f"normalizes: {'yes' if rec.normalizes else 'no'}", file=out)
    print(f"fixed-set dimension f: {rec.f}", file=out)
    print(f"centralizer dimension: {rec.dim_C}", file=out)
    print(f"dimension formula holds: "
          f"{'yes' if rec.formula_holds else 'no'}", file=out)
    return 0


def _build_argparser():
    ap = argparse.ArgumentParser(
        prog="repgeom",
        description="exact invariants of orthogonal representations of "
                    "compact Lie groups")
    ap.add_argument("--seed", type=int, default=DEFAULT_SEED)
    ap.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)
    sub = ap.add_subparsers(dest="command", required=True)
    for name, fn, with_expr in (
            ("info", _cmd_info, True), ("cohom", _cmd_cohom, True),
            ("polar", _cmd_polar, True),
            ("copolarity", _cmd_copolarity, True),
            ("boundary", _cmd_boundary, True)):
        p = sub.add_parser(name)
        p.add_argument("expr")
        p.set_defaults(fn=fn)
    p = sub.add_parser("classify")
    p.add_argument("--cohom", type=int, choices=(4, 5), required=True)
    p.add_argument("--format", choices=("json", "csv", "md"), default="md")
    p.set_defaults(fn=_cmd_classify)
    p = sub.add_parser("tables")
    p.add_argument("--verify", action="store_true", required=True)
    p.set_defaults(fn=_cmd_tables)
    p = sub.add_parser("torus-case")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(fn=_cmd_torus_case)
    p = sub.add_parser("audit-involution")
    p.add_argument("expr")
    p.add_argument("--matrix", required=True)
    p.set_defaults(fn=_cmd_audit)
    return ap


def run_command(argv, out=None, err=None):
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    ap = _build_argparser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else 2
    try:
        return args.fn(args, out)
    except (RepSyntaxError, RepTypeError, ValueError, TypeError,
            AssertionError, OSError) as exc:
        print(f"error: {exc}", file=err)
        return 1


def main():
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
