import json

import pytest

from leavitt import Graph, dump_graph_json, ideals
from leavitt.cli import main


@pytest.fixture
def graph_file(tmp_path, loop_with_exit):
    path = tmp_path / "loop_with_exit.json"
    path.write_text(dump_graph_json(loop_with_exit), encoding="utf-8")
    return str(path)


def write_graph(tmp_path, graph, name="g.json"):
    path = tmp_path / name
    path.write_text(dump_graph_json(graph), encoding="utf-8")
    return str(path)


def test_analyze_json(graph_file, capsys):
    assert main(["analyze", "--graph", graph_file, "--generators", "v", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["is_regular"] is False
    assert doc["quotient_condition_L"] is False
    assert doc["ideal"] == ["v"]
    assert doc["bar_closure"] == ["u", "v"]
    assert doc["perp_set"] == []
    assert doc["double_perp_set"] == ["u", "v"]


def test_analyze_text(graph_file, capsys):
    assert main(["analyze", "--graph", graph_file, "--generators", "v"]) == 0
    out = capsys.readouterr().out
    assert "regular: no" in out
    assert "quotient satisfies condition (L): no" in out


def test_analyze_zero_ideal(graph_file, capsys):
    assert main(["analyze", "--graph", graph_file, "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["ideal"] == []
    assert doc["is_regular"] is True


def test_analyze_unknown_vertex(graph_file, capsys):
    assert main(["analyze", "--graph", graph_file, "--generators", "zz"]) == 3
    assert "unknown vertex" in capsys.readouterr().err


def test_parse_error(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{broken", encoding="utf-8")
    assert main(["analyze", "--graph", str(bad)]) == 2
    assert "error:" in capsys.readouterr().err


def test_missing_file(tmp_path):
    assert main(["analyze", "--graph", str(tmp_path / "none.json")]) == 2


def test_lattice_text(graph_file, capsys):
    assert main(["lattice", "--graph", graph_file]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "3 hereditary saturated sets"
    assert "{} regular=yes" in out
    assert "{v} regular=no" in out
    assert "{u, v} regular=yes" in out


def test_lattice_json(graph_file, capsys):
    assert main(["lattice", "--graph", graph_file, "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert [entry["vertices"] for entry in doc] == [[], ["v"], ["u", "v"]]
    assert [entry["is_regular"] for entry in doc] == [True, False, True]


def test_lattice_dot(graph_file, capsys):
    assert main(["lattice", "--graph", graph_file, "--dot"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("digraph hs_lattice {")
    assert out.count("->") == 2  # covering relations of the 3-chain
    assert "regular" in out


def test_lattice_empty_graph(tmp_path, capsys):
    path = write_graph(tmp_path, Graph((), ()))
    assert main(["lattice", "--graph", path]) == 0
    assert capsys.readouterr().out.splitlines()[0] == "1 hereditary saturated sets"


def test_lattice_cutoff(tmp_path, capsys):
    big = Graph(tuple(f"v{i}" for i in range(21)), ())
    path = write_graph(tmp_path, big)
    assert main(["lattice", "--graph", path]) == 4


def test_quotient(graph_file, capsys):
    assert main(["quotient", "--graph", graph_file, "--generators", "v"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc == {
        "vertices": ["u"],
        "edges": [{"name": "f", "src": "u", "dst": "u"}],
    }


def test_perp_json(graph_file, capsys):
    assert main(["perp", "--graph", graph_file, "--generators", "v", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc == {"ideal": ["v"], "bar_closure": ["u", "v"], "perp": []}


def test_verify_small(capsys):
    code = main(
        ["verify", "--max-vertices", "3", "--max-edges", "4", "--trials", "30"]
    )
    out = capsys.readouterr().out
    assert code == 0
    assert out.endswith("result: PASS\n")


def test_verify_json(capsys):
    code = main(
        ["verify", "--max-vertices", "2", "--max-edges", "2", "--trials", "10", "--json"]
    )
    assert code == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["passed"] is True
    assert len(doc["rows"]) == 12


def test_verify_zero_trials(capsys):
    assert main(["verify", "--trials", "0"]) == 0
    out = capsys.readouterr().out
    assert "result: PASS" in out


def test_verify_is_byte_deterministic(capsys):
    argv = ["verify", "--max-vertices", "3", "--max-edges", "3", "--trials", "25"]
    assert main(argv) == 0
    first = capsys.readouterr().out
    assert main(argv) == 0
    second = capsys.readouterr().out
    assert first == second


def test_verify_reports_failure_with_exit_1(monkeypatch, capsys):
    monkeypatch.setattr(ideals, "bar_closure", lambda ideal: ideal.vertices)
    code = main(
        ["verify", "--max-vertices", "3", "--max-edges", "3", "--trials", "1"]
    )
    out = capsys.readouterr().out
    assert code == 1
    assert "result: FAIL" in out
    assert "counterexample[perp-vertex-set]:" in out


def test_oracle_check(tmp_path, capsys):
    g = Graph(("a", "b"), (("e", "a", "b"),))
    path = write_graph(tmp_path, g)
    assert main(["oracle-check", "--graph", path]) == 0
    out = capsys.readouterr().out
    assert "oracle dimension: 4 over GF(2)" in out
    assert "FAIL" not in out


def test_oracle_check_rejects_cycles(graph_file, capsys):
    assert main(["oracle-check", "--graph", graph_file]) == 3
    assert "acyclic" in capsys.readouterr().err


def test_oracle_check_dimension_cap(tmp_path, capsys):
    vertices = tuple(f"v{i}" for i in range(6))
    edges = []
    for i in range(5):
        edges.append((f"a{i}", f"v{i}", f"v{i+1}"))
        edges.append((f"b{i}", f"v{i}", f"v{i+1}"))
    path = write_graph(tmp_path, Graph(vertices, tuple(edges)))
    assert main(["oracle-check", "--graph", path]) == 4


def test_oracle_check_nonprime(tmp_path, capsys):
    path = write_graph(tmp_path, Graph(("a",), ()))
    assert main(["oracle-check", "--graph", path, "--prime", "6"]) == 3
