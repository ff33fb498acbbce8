import io
import json

import pytest

from tamequiver.cli import run
from tamequiver.io import (
    FIXTURES,
    ParseError,
    emit_json,
    fixture,
    fixture_path,
    load_quiver,
    parse_dimvector,
    quiver_to_json,
)
from tamequiver.quiver import classify_graph

from .conftest import E6_ALPHA, E6_DELTA, E6_SIMPLES

E6 = str(fixture_path("e6t"))
ALPHA = ",".join(map(str, E6_ALPHA))


def cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_load_bundled_e6():
    q = load_quiver(E6)
    named = {(q.labels[t], q.labels[h]) for t, h in q.arrows}
    assert named == {("1", "2"), ("2", "7"), ("3", "4"), ("4", "7"), ("5", "6"), ("6", "7")}


EXPECTED_TAGS = {
    "a1t": "A-tilde",
    "a2t": "A-tilde",
    "a3t": "A-tilde",
    "a4t": "A-tilde",
    "d4t": "D-tilde",
    "d5t": "D-tilde",
    "e6t": "E6-tilde",
    "e7t": "E7-tilde",
    "e8t": "E8-tilde",
}


@pytest.mark.parametrize("name", FIXTURES)
def test_every_fixture_loads_and_classifies(name):
    assert classify_graph(fixture(name)).tag == EXPECTED_TAGS[name]


def test_load_quiver_errors(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"vertices": ["a", "b"], "arrows": [["a", "c"]]}')
    with pytest.raises(ParseError):
        load_quiver(bad)
    bad.write_text("{not json")
    with pytest.raises(ParseError):
        load_quiver(bad)
    bad.write_text('{"vertices": ["a", "a"]}')
    with pytest.raises(ParseError):
        load_quiver(bad)
    with pytest.raises(ParseError):
        load_quiver(tmp_path / "missing.json")
    ok = tmp_path / "one.json"
    ok.write_text('{"vertices": ["x"], "arrows": []}')
    q = load_quiver(ok)
    assert q.n_vertices == 1 and q.arrows == ()
    assert quiver_to_json(q) == {"vertices": ["x"], "arrows": []}


def test_parse_dimvector():
    assert parse_dimvector("1, 2,3") == (1, 2, 3)
    with pytest.raises(ParseError):
        parse_dimvector("1,a")
    with pytest.raises(ParseError):
        parse_dimvector("1,2", fixture("e6t"))


def test_delta_command():
    code, out, _ = cli("delta", E6)
    assert code == 0
    assert out.strip() == "1,2,1,2,1,2,3"
    code, out, _ = cli("delta", "--json", E6)
    assert json.loads(out) == list(E6_DELTA)


def test_decomp_lss_command():
    code, out, _ = cli("decomp", "--kind", "lss", E6, ALPHA)
    assert code == 0
    assert "2*delta" in out
    # explicit vectors of the real terms, with their multiplicities
    assert "3 x (1,1,0,1,0,0,1)  real" in out
    assert "2 x (0,0,1,1,0,1,1)  real" in out
    assert "2 x (0,1,1,2,1,1,2)  real" in out
    assert "1 x (1,1,1,1,1,1,2)  real" in out
    code, out, _ = cli("decomp", "--kind", "lss", "--json", E6, ALPHA)
    data = json.loads(out)
    assert data["delta_mult"] == 2
    assert [t["kind"] for t in data["terms"]] == ["imaginary"] * 2 + ["real"] * 4


def test_decomp_canonical_non_regular():
    code, _, err = cli("decomp", "--kind", "canonical", E6, "1,0,0,0,0,0,0")
    assert code == 1
    assert "defect = -1, not regular" in err


def test_decomp_canonical_json():
    code, out, _ = cli("decomp", "--kind", "canonical", "--json", E6, ALPHA)
    assert code == 0
    data = json.loads(out)
    assert data["delta_mult"] == 2
    roots = {tuple(c["root"]): c["mult"] for c in data["coefficients"]}
    e = E6_SIMPLES
    assert roots == {e[1]: 3, e[2]: 2, e[5]: 2, e[6]: 2, e[8]: 1}


def test_empty_decomposition_json():
    code, out, _ = cli("decomp", "--json", E6, "0,0,0,0,0,0,0")
    assert code == 0
    assert json.loads(out) == {"delta_mult": 0, "terms": []}


def test_an_command():
    code, out, _ = cli("an", "--kind", "lss", "2,3")
    assert code == 0 and "2*S[1,1] + 3*S[2,2]" in out
    code, out, _ = cli("an", "--json", "2,3")
    assert json.loads(out) == [{"interval": [1, 2], "mult": 2}, {"interval": [2, 2], "mult": 1}]
    code, _, _ = cli("an", "2,-1")
    assert code == 1


def test_regular_and_info_commands():
    code, out, _ = cli("regular", E6)
    assert code == 0 and "8 regular simples in 3 c-orbits" in out
    code, out, _ = cli("regular", "--json", E6)
    data = json.loads(out)
    assert sorted(len(o) for o in data["orbits"]) == [2, 3, 3]
    code, out, _ = cli("info", "--json", E6)
    assert json.loads(out)["type"] == "E6-tilde"
    code, out, _ = cli("info", E6)
    assert "type: E6-tilde" in out


def test_siring_command():
    code, out, _ = cli("siring", E6, ",".join(map(str, E6_DELTA)))
    assert code == 0
    assert "hypersurface algebra of Krull dimension 7 with 8 generators" in out
    assert "c_1P_1+c_2P_2+c_3P_3=0" in out
    code, out, _ = cli("siring", "--json", E6, ALPHA)
    data = json.loads(out)
    assert data["krull_dim"] == 4 and data["case"] == "polynomial"
    assert emit_json(data) == out


def test_oracle_commands(tmp_path):
    code, out, _ = cli("oracle", "verify-an", "--n", "4")
    assert code == 0 and "0 mismatches" in out
    code, out, _ = cli("oracle", "verify-eq", E6, "--seed", "1")
    assert code == 0 and "E(Q) arrows confirmed" in out
    a2 = tmp_path / "a2.json"
    a2.write_text('{"vertices": ["1", "2"], "arrows": [["1", "2"]]}')
    ra = tmp_path / "ra.json"
    rb = tmp_path / "rb.json"
    ra.write_text('{"dims": [1, 1], "maps": [[1]]}')
    rb.write_text('{"dims": [0, 1], "maps": [[]]}')
    code, out, _ = cli("oracle", "hom", "--json", str(a2), str(ra), str(rb))
    assert code == 0
    assert json.loads(out) == {"hom": 0, "ext": 0, "euler": 0, "schofield": "1"}
    rb.write_text('{"dims": [0, 1], "maps": [[1, 2]]}')
    code, _, err = cli("oracle", "hom", str(a2), str(ra), str(rb))
    assert code == 2
    assert "error" in err


def test_exit_codes(tmp_path):
    assert cli()[0] == 2
    assert cli("decomp", "--kind", "bogus", E6, ALPHA)[0] == 2
    assert cli("delta", str(tmp_path / "missing.json"))[0] == 2
    assert cli("decomp", E6, "1,2")[0] == 2
    assert cli("decomp", E6, "1,x,0,0,0,0,0")[0] == 2
    cyc = tmp_path / "cyc.json"
    cyc.write_text('{"vertices": ["1", "2", "3"], "arrows": [["1", "2"], ["2", "3"], ["3", "1"]]}')
    assert cli("regular", str(cyc))[0] == 1
    path = tmp_path / "a3.json"
    path.write_text('{"vertices": ["1", "2", "3"], "arrows": [["1", "2"], ["2", "3"]]}')
    code, _, err = cli("delta", str(path))
    assert code == 1
    assert "error:" in err


def test_main_module_help():
    code, out, _ = cli("--help")
    assert code == 0
