from fractions import Fraction
from pathlib import Path

import pytest

from rbsys import audit, lie, search, serial
from rbsys import rbs as R
from rbsys import tables as T
from rbsys.qlinalg import Matrix
from conftest import A3, REFL12

SAMPLES = Path(__file__).resolve().parent.parent / "samples"


# -- loaders --------------------------------------------------------------------


def test_sample_groups_load():
    assert serial.load_group(SAMPLES / "z2.json").table == T.cyclic(2).table
    assert serial.load_group(SAMPLES / "s3.json").table == T.symmetric(3).table
    assert serial.load_group(SAMPLES / "v4.json").table == T.klein().table


def test_group_round_trip():
    G = T.symmetric(3)
    back = serial.group_from_dict(serial.group_to_dict(G))
    assert back.table == G.table and back.kind == "group"


@pytest.mark.parametrize("obj,field", [
    ({"table": [[0]]}, "order"),
    ({"order": 2, "table": [[0, 1]]}, "table"),
    ({"order": 2, "table": [[0, 1], [1, 0]], "kind": "ring"}, "kind"),
    ({"order": 2, "table": [[0, 1], [1, 1.5]]}, "table"),
    ({"order": 2, "table": [[0, 0], [0, 1]], "kind": "group"}, "table"),
    ({"order": 2, "table": [[0, 1], [1, 0]], "labels": ["a"]}, "labels"),
    ([1, 2], "<root>"),
])
def test_group_errors_name_the_field(obj, field):
    with pytest.raises(serial.InputError) as exc:
        serial.group_from_dict(obj, "g.json")
    assert exc.value.field == field and exc.value.path == "g.json"
    assert exc.value.to_dict()["ok"] is False


def test_missing_and_broken_files(tmp_path):
    with pytest.raises(serial.InputError) as exc:
        serial.read_json(tmp_path / "nope.json")
    assert exc.value.field == "<file>"
    p = tmp_path / "bad.json"
    p.write_text("{not json")
    with pytest.raises(serial.InputError) as exc:
        serial.read_json(p)
    assert exc.value.field == "<json>"


def test_operators():
    assert serial.load_operator(SAMPLES / "z2_swap.json", 2) == (1, 0)
    for bad in ({"map": [0]}, {"map": [0, 2]}, {"map": [0, True]}, {"mapp": [0, 1]}):
        with pytest.raises(serial.InputError):
            serial.operator_from_dict(bad, 2)


def test_matrices():
    M = serial.load_matrix(SAMPLES / "sl2_borel_r.json", 3)
    assert M == lie.diag(1, 1, -1)
    assert serial.matrix_from_dict({"rows": [["1/2", 3]]}) == Matrix.of([[Fraction(1, 2), 3]])
    assert serial.matrix_to_dict(Matrix.of([[Fraction(-1, 3)]])) == {"rows": [["-1/3"]]}
    for bad in ({"rows": [[0.5]]}, {"rows": [["x"]]}, {"rows": [[1, 2], [3]]}, {"rows": [["1/0"]]}, {"rows": []}):
        with pytest.raises(serial.InputError):
            serial.matrix_from_dict(bad)
    with pytest.raises(serial.InputError):
        serial.matrix_from_dict({"rows": [[1, 0], [0, 1]]}, 3)


def test_lie_algebras():
    alg = serial.load_lie(SAMPLES / "sl2.json")
    assert alg.c == lie.sl2().c and alg.labels == ("e", "h", "f")
    assert serial.load_lie(SAMPLES / "two_dim.json").c == lie.two_dim().c
    assert serial.lie_from_dict(lie.sl2().to_dict()).c == lie.sl2().c
    with pytest.raises(serial.InputError) as exc:
        serial.lie_from_dict({"dim": 2, "c": [[[0, 0], [1, 0]], [[1, 0], [0, 0]]]})
    assert exc.value.field == "c"
    with pytest.raises(serial.InputError) as exc:
        serial.lie_from_dict({"dim": 1, "c": [[[0]]], "labels": ["a", "b"]})
    assert exc.value.field == "labels"


def test_subspaces_and_vectors():
    U = serial.load_subspace(SAMPLES / "sl2_span_h.json", 3)
    assert U.basis == ((0, 1, 0),)
    assert serial.subspace_from_dict(serial.subspace_to_dict(U), 3) == U
    with pytest.raises(serial.InputError):
        serial.subspace_from_dict({"basis": [[1, 0]]}, 3)
    assert serial.parse_vector("1, 0,-1/2", 3) == (1, 0, Fraction(-1, 2))
    with pytest.raises(serial.InputError):
        serial.parse_vector("1,0", 3)


def test_dumps_is_stable():
    assert serial.dumps({"a": [1, 2]}) == '{"a":[1,2]}\n'
    assert serial.dumps({"a": 1}, pretty=True) == '{\n  "a": 1\n}\n'


# -- audit ---------------------------------------------------------------------------


def test_hom_equivalence_on_z3():
    z3 = T.cyclic(3)
    maps = [(a, b, c) for a in range(3) for b in range(3) for c in range(3)]
    count = sum(audit.hom_equivalence(z3, b1, b2) for b1 in maps for b2 in maps)
    assert count == 10


def test_pair_suite():
    z2 = T.cyclic(2)
    assert audit.pair_suite(z2, (0, 1), (0, 1)) == {"hom": False, "action": True, "truss": True}
    assert audit.pair_suite(z2, (0, 0), (1, 1)) == {"hom": False, "action": False}


def test_theorem_suite_s3_constructions():
    s3 = T.symmetric(3)
    out = audit.theorem_suite(R.from_factorization(s3, A3, REFL12))
    assert out["components"] == 1 and out["phi_bijective"] and out["factorization"] == 6
    out = audit.theorem_suite(R.from_rb_group(s3, T.constant_map(s3)))
    assert out["phi_bijective"]


def test_theorem_suite_needs_verified():
    z2 = T.cyclic(2)
    with pytest.raises(R.TheoremViolation):
        audit.theorem_suite(R.make_instance(z2, (0, 1), (0, 0)))


def test_theorem_suite_over_v4_catalog():
    G = T.klein()
    seen = set()
    for b1, b2 in search.enumerate_pruned(G).entries:
        out = audit.theorem_suite(R.verify_rbs(G, b1, b2))
        seen.add((out["components"], out["phi_bijective"]))
    assert (1, True) in seen and any(c > 1 for c, _ in seen)
