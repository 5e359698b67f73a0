"""Command-line interface: grammar, round trips, commands, exit codes."""
import io
import json

import pytest

from repgeom.cli import (parse_rep, print_rep, run_command,
                         RepSyntaxError, RepTypeError)
from repgeom.matrep import (Leaf, TensorR, TensorC, TensorH, DirectSum,
                            build_action)
from repgeom.rootsys import SimpleType

from helpers import st


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    code = run_command(argv, out, err)
    return code, out.getvalue(), err.getvalue()


ROUND_TRIP = [
    "SU(6): Lambda^2",
    "SU(3): S^2",
    "SU(2): C^4",
    "SO(3): R^7",
    "SO(3): S^2_0",
    "SO(5): Lambda^2",
    "SO(6): R^6",
    "SO(8): S^2_0",
    "SO(17): Lambda^2",
    "SP(2): C^4",
    "SP(3): [0, 0, 1]",
    "Spin(7): spin",
    "Spin(10): spin",
    "G2: R^7",
    "F4: R^26",
    "E6: C^27",
    "E7: adjoint",
    "E8: adjoint",
    "SO(2): R^2",
    "SO(4): R^4",
    "U(1)",
    "SO(3): R^3 (x)_R G2: R^7",
    "SU(3): C^3 (x)_C SP(2): C^4",
    "SP(2): C^4 (x)_C SU(3): C^3 (x)_C U(1)",
    "SU(2): C^2 (x)_H SP(3): C^6",
    "SU(2): C^2 (+) SU(2): C^2",
    "SU(4): [1, 0, 1]",
]


def test_parse_print_parse_is_stable():
    for text in ROUND_TRIP:
        e = parse_rep(text)
        assert parse_rep(print_rep(e)) == e


def test_parse_elaborates_sugar():
    assert parse_rep("SU(6): Lambda^2") == Leaf(st("A", 5), (0, 1, 0, 0, 0))
    assert parse_rep("E6: C^27") == Leaf(st("E", 6), (1, 0, 0, 0, 0, 0))
    assert parse_rep("SO(3): R^3 (x)_R G2: R^7") == \
        TensorR(Leaf(st("A", 1), (2,)), Leaf(st("G", 2), (1, 0)))
    assert parse_rep("SO(4): R^4") == \
        TensorH(Leaf(st("A", 1), (1,)), Leaf(st("A", 1), (1,)))
    assert parse_rep("SO(5): Lambda^2") == Leaf(st("B", 2), (0, 2))
    assert parse_rep("Spin(7): spin") == Leaf(st("B", 3), (0, 0, 1))
    assert parse_rep("SP(2): C^4") == Leaf(st("B", 2), (0, 1))


def test_parse_is_whitespace_insensitive():
    assert parse_rep("SO(3):R^3(x)_RG2:R^7") == \
        parse_rep("  SO(3) :  R^3   (x)_R  G2 : R^7 ")


def test_sugar_dimensions_match_nominal():
    from repgeom.rootsys import build_root_system, weyl_dim
    # nominal dimension of the sugar form = dimension of the complex module
    for text, dim in [("SO(7): R^7", 7), ("SU(5): C^5", 5),
                      ("SP(3): Q^3", 6), ("SU(4): Lambda^2", 6),
                      ("SO(9): S^2_0", 44), ("SU(3): S^2", 6),
                      ("Spin(9): spin", 16), ("F4: R^26", 26),
                      ("E7: C^56", 56)]:
        leaf = parse_rep(text)
        assert weyl_dim(build_root_system(leaf.type), leaf.weight) == dim
    # and the realified sizes follow the Frobenius-Schur type
    assert build_action(parse_rep("SU(5): C^5")).dim_V == 10
    assert build_action(parse_rep("SP(3): Q^3")).dim_V == 12
    assert build_action(parse_rep("SU(4): Lambda^2")).dim_V == 6


def test_syntax_errors_carry_byte_offsets():
    cases = [("SU(2: C^4", 4), ("Q(3): R^3", 0),
             ("SU(3): C^3 (x)_R", 16)]
    for text, pos in cases:
        with pytest.raises(RepSyntaxError) as exc:
            parse_rep(text)
        assert exc.value.pos == pos
        assert f"byte {pos}" in str(exc.value)


def test_type_errors_name_the_offending_subtree():
    cases = [("SO(3): [1]", "SO(3)"),
             ("SO(4): [1,0]", "SO(4)"),
             ("SO(3): S^2", "SO(3):S^2"),
             ("SO(3): R^3 (x)_H SO(3): R^3", "SO(3):R^3")]
    for text, frag in cases:
        with pytest.raises(RepTypeError) as exc:
            parse_rep(text)
        assert exc.value.fragment == frag


def test_combinator_type_rules():
    # (x)_C rejects real-type factors; (x)_H needs two quaternionic ones
    with pytest.raises(RepTypeError):
        parse_rep("SO(3): R^3 (x)_C SU(3): C^3")
    with pytest.raises(RepTypeError):
        parse_rep("SU(3): C^3 (x)_H SU(2): C^2")
    # (x)_R of two non-real factors gives a reducible module
    with pytest.raises(RepTypeError):
        parse_rep("SU(3): C^3 (x)_R SU(3): C^3")


def test_cmd_cohom():
    assert run(["cohom", "SU(2): C^4"]) == (0, "5\n", "")
    assert run(["cohom", "SO(3): R^7"]) == (0, "4\n", "")
    assert run(["cohom", "E6: C^27"]) == (0, "4\n", "")


def test_cmd_info():
    code, out, err = run(["info", "SO(3): R^3 (x)_R G2: R^7"])
    assert code == 0 and err == ""
    assert out == "expression: SU(2):[2] (x)_R G2:[1,0]\ndim V: 21\ndim G: 17\n"


def test_cmd_polar_and_copolarity():
    assert run(["polar", "SO(3): S^2_0"]) == (0, "yes\n", "")
    assert run(["polar", "SO(3): R^7"]) == (0, "no\n", "")
    assert run(["copolarity", "SO(3): S^2_0"]) == (0, "0 (polar)\n", "")
    assert run(["copolarity", "SO(3): R^7"]) == (0, "trivial\n", "")


def test_cmd_boundary():
    assert run(["boundary", "SU(2): C^4"]) == (0, "certified-no\n", "")
    assert run(["boundary", "SU(3): S^2"]) == (0, "yes\n", "")


def test_cmd_torus_case():
    assert run(["torus-case", "--k", "3"]) == \
        (0, "cohom 5\nboundary: certified-no\n", "")
    assert run(["torus-case", "--k", "1"])[1].startswith("cohom 3")


def test_cmd_audit_involution(tmp_path):
    from repgeom import geometry as G
    a = build_action(parse_rep("SO(3): R^7"))
    w = G.rotation_involution(a)
    path = tmp_path / "w.txt"
    lines = [f"{a.dim_V} {a.dim_V}"]
    for i in range(a.dim_V):
        lines.append(" ".join(str(w[(i, j)]) for j in range(a.dim_V)))
    path.write_text("\n".join(lines) + "\n")
    code, out, err = run(["audit-involution", "SO(3): R^7",
                          "--matrix", str(path)])
    assert code == 0 and err == ""
    assert "yes" in out


def test_exit_codes():
    # parse failure inside a command: exit 1 with a message on stderr
    code, out, err = run(["cohom", "SU(2: C^4"])
    assert code == 1 and out == ""
    assert err.startswith("error: syntax error at byte 4")
    code, out, err = run(["cohom", "SO(3): [1]"])
    assert code == 1 and "type error" in err
    # unknown command or missing required argument: argparse exits with 2
    assert run(["nonsense"])[0] == 2
    assert run(["cohom"])[0] == 2
    assert run(["torus-case"])[0] == 2


def test_missing_matrix_file_fails_cleanly(tmp_path):
    code, out, err = run(["audit-involution", "SO(3): R^7",
                          "--matrix", str(tmp_path / "absent.txt")])
    assert code == 1 and err.startswith("error:")
