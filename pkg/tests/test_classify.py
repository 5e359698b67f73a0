"""Classification plumbing: canonical weights, labels, table comparison."""
import pytest

from repgeom import classify as C
from repgeom._fixtures import COHOM4_ROWS, COHOM5_ROWS

from helpers import st


def test_canonical_weight_aliases():
    # C2 = B2 with swapped nodes
    t, w = C.canonical_weight(st("C", 2), (1, 0))
    assert (t.family, t.rank, w) == ("B", 2, (0, 1))
    t, w = C.canonical_weight(st("C", 2), (0, 1))
    assert (t.family, t.rank, w) == ("B", 2, (1, 0))
    # D3 = A3 with the two spin nodes moved outward
    t, w = C.canonical_weight(st("D", 3), (1, 0, 0))
    assert (t.family, t.rank) == ("A", 3)


def test_canonical_weight_duality():
    # dual pairs collapse to the lex-min representative
    t, w1 = C.canonical_weight(st("A", 2), (2, 0))
    t, w2 = C.canonical_weight(st("A", 2), (0, 2))
    assert w1 == w2
    t, w = C.canonical_weight(st("A", 5), (1, 0, 0, 0, 0))
    assert w == C.canonical_weight(st("A", 5), (0, 0, 0, 0, 1))[1]


def test_canonical_weight_d_family():
    # D4 triality orbit: the vector module and both half-spin modules agree
    keys = {C.canonical_weight(st("D", 4), w)[1]
            for w in [(1, 0, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)]}
    assert len(keys) == 1
    # D5: swap of the two half-spin nodes
    a = C.canonical_weight(st("D", 5), (0, 0, 0, 1, 0))[1]
    b = C.canonical_weight(st("D", 5), (0, 0, 0, 0, 1))[1]
    assert a == b


def test_simple_key_identifies_isomorphic_modules():
    assert C.simple_key(st("C", 2), (0, 1)) == C.simple_key(st("B", 2), (1, 0))
    assert C.simple_key(st("A", 3), (1, 0, 0)) == \
        C.simple_key(st("A", 3), (0, 0, 1))


def test_labels_frozen():
    cases = [
        (st("A", 1), (3,), ("SU2", "C^4")),
        (st("A", 1), (2,), ("SO3", "R^3")),
        (st("A", 2), (0, 2), ("SU3", "S^2 C^3")),
        (st("A", 2), (1, 1), ("SU3", "adjoint")),
        (st("A", 5), (0, 0, 0, 1, 0), ("SU6", "Lambda^2 C^6")),
        (st("B", 2), (0, 2), ("SO5", "Lambda^2 R^5")),
        (st("B", 2), (0, 1), ("SP2", "C^4")),
        (st("B", 3), (0, 0, 1), ("Spin7", "R^8")),
        (st("C", 3), (0, 0, 1), ("SP3", "[Lambda^3_0 C^6]_R")),
        (st("D", 4), (0, 0, 0, 2), ("SO8", "S^2_0 R^8")),
        (st("E", 6), (0, 0, 0, 0, 0, 1), ("E6", "C^27")),
        (st("G", 2), (1, 0), ("G2", "R^7")),
    ]
    for t, w, expected in cases:
        tc, wc = C.canonical_weight(t, w)
        assert C._labels(tc, wc) == expected


def test_fixture_keys_sizes():
    assert len(C.reference_simple_keys()) == 74
    assert len(C.reference_c1_keys()) == 45


def test_reference_tables_shape():
    assert len(COHOM4_ROWS) == 7
    assert len(COHOM5_ROWS) == 7
    for rows in (COHOM4_ROWS, COHOM5_ROWS):
        fixture = C.reference_table(4 if rows is COHOM4_ROWS else 5)
        assert len(fixture) == 7


def _rows_from_fixture(fixture):
    return [C.ClassificationRow(
        group_label=f["group"], rep_label=f["rep"], rep_expr=None,
        cohomogeneity=f["cohomogeneity"], polar=f["polar"],
        group_dim=0, dim_V=0, key=None,
        copolarity=f["copolarity"], boundary=f["boundary"])
        for f in fixture]


def test_compare_to_reference_detects_diffs():
    fixture = C.reference_table(4)
    rows = _rows_from_fixture(fixture)
    diff = C.compare_to_reference(rows, fixture)
    assert diff["match"]
    assert diff["missing"] == [] and diff["extra"] == []
    # drop one row and replace another by a bogus one
    broken = rows[1:]
    broken[0] = C.ClassificationRow(
        group_label="X", rep_label="Y", rep_expr=None, cohomogeneity=4,
        polar=False, group_dim=0, dim_V=0, key=None)
    diff = C.compare_to_reference(broken, fixture)
    assert not diff["match"]
    assert len(diff["missing"]) == 2
    assert len(diff["extra"]) == 1
    # a wrong cell value in an existing row is reported as a mismatch
    rows = _rows_from_fixture(fixture)
    rows[0].copolarity = 99
    diff = C.compare_to_reference(rows, fixture)
    assert not diff["match"] and len(diff["mismatched"]) == 1


def test_row_record_and_emitters():
    row = C.ClassificationRow(
        group_label="SO3", rep_label="R^7", rep_expr=None, cohomogeneity=4,
        polar=False, group_dim=3, dim_V=7, key=("leaf", "G", 2, (1, 0)),
        copolarity="trivial", boundary="no")
    rec = C.row_record(row)
    assert list(rec) == list(C._SCHEMA)
    assert rec["copolarity"] == "trivial"
    csv_text = C.to_csv([row])
    assert csv_text.splitlines()[0] == \
        "group,rep,cohomogeneity,polar,copolarity,boundary,provenance"
    assert "SO3,R^7,4,False,trivial,no,Computed" in csv_text
    json_text = C.to_json([row])
    assert '"group": "SO3"' in json_text
    md = C.to_text([row])
    assert md.splitlines()[0].startswith("| group")
    # undecided cells surface as "unknown" rather than crashing the emitters
    bare = C.ClassificationRow(
        group_label="X", rep_label="Y", rep_expr=None, cohomogeneity=1,
        polar=True, group_dim=1, dim_V=1, key=("k",))
    rec = C.row_record(bare)
    assert rec["copolarity"] == "unknown" and rec["boundary"] == "unknown"


def test_fixture_type_weight_roundtrip():
    # fixture kinds translate to the same canonical keys the sweep produces
    t, w = C.fixture_type_weight("SU", 6, "L2")
    assert C.simple_key(t, w) == C.simple_key(st("A", 5), (0, 1, 0, 0, 0))
    t, w = C.fixture_type_weight("SO", 7, "L2")
    assert C.simple_key(t, w) == C.simple_key(st("B", 3), _adj(st("B", 3)))
    t, w = C.fixture_type_weight("Spin", 7, "spin")
    assert C.simple_key(t, w) == C.simple_key(st("B", 3), (0, 0, 1))
    # the two low-rank coincidences collapse onto single canonical keys
    assert C.simple_key(*C.fixture_type_weight("SP", 2, "S2")) == \
        C.simple_key(*C.fixture_type_weight("SO", 5, "L2"))
    assert C.simple_key(*C.fixture_type_weight("SU", 4, "adjoint")) == \
        C.simple_key(*C.fixture_type_weight("SO", 6, "L2"))


def _adj(t):
    return C._adjoint_weight(t)


def test_enumerate_simple_rejects_bad_range():
    with pytest.raises(ValueError):
        C.enumerate_simple(1, 3)
    with pytest.raises(ValueError):
        C.enumerate_simple(5, 4)
    with pytest.raises(ValueError):
        C.enumerate_simple(2, 9)
