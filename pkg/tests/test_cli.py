import json

import pytest

from ntdom.cli import main
from ntdom.edgelist import parse_edge_list, parse_edge_list_documents, serialize_edge_list
from ntdom.named import cycle, example_member, path, star


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    return _write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_solve(capsys, write):
    f = write("p6.edges", serialize_edge_list(path(6)))
    code, out, _ = run(capsys, "solve", f)
    doc = json.loads(out)
    assert code == 0 and doc["value"] == 3 and doc["param"] == "gamma-nt"
    for param, value in [("gamma", 2), ("gamma-t", 4)]:
        code, out, _ = run(capsys, "solve", f, "--param", param, "--method", "bruteforce")
        assert code == 0 and json.loads(out)["value"] == value
    code, out, _ = run(capsys, "solve", f, "--method", "treedp")
    assert json.loads(out)["method"] == "treedp"


def test_solve_output_file(capsys, write, tmp_path):
    f = write("c4.edges", serialize_edge_list(cycle(4)))
    out_path = tmp_path / "out.json"
    code, out, _ = run(capsys, "solve", f, "--output", str(out_path))
    assert code == 0 and out == ""
    assert json.loads(out_path.read_text())["value"] == 2


def test_solve_exit_codes(capsys, write):
    assert run(capsys, "solve", write("bad.edges", "3\n0 1\n0 1\n"))[0] == 2
    assert run(capsys, "solve", write("self.edges", "2\n1 1\n"))[0] == 2
    assert run(capsys, "solve", write("split.edges", "3\n0 1\n"))[0] == 3
    assert run(capsys, "solve", write("k1.edges", "1\n"))[0] == 3
    assert run(capsys, "solve", write("c4.edges", serialize_edge_list(cycle(4))), "--method", "treedp")[0] == 3
    assert run(capsys, "solve", "/nonexistent/file")[0] == 2


def test_solve_budget(capsys, write):
    f = write("member36.edges", serialize_edge_list(example_member()))
    code, out, _ = run(capsys, "solve", f, "--budget", "0")
    doc = json.loads(out)
    assert code == 4 and doc["budget_exhausted"] and doc["lower"] <= 18 <= doc["upper"]


@pytest.mark.parametrize("n, count", [(4, 2), (7, 11), (10, 106)])
def test_enumerate_trees(capsys, n, count):
    code, out, err = run(capsys, "enumerate-trees", str(n))
    docs = parse_edge_list_documents(out)
    assert code == 0 and len(docs) == count and all(G.n == n for G in docs)
    assert f"{count} trees" in err


def test_enumerate_range(capsys):
    assert run(capsys, "enumerate-trees", "0")[0] == 2
    assert run(capsys, "enumerate-trees", "21")[0] == 2


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--theorem", "even", "--max-order", "8")
    doc = json.loads(out)
    assert code == 0 and doc["passed"] and [r["extremal"] for r in doc["rows"]] == [2, 3, 10]


def test_family_build_and_recognize(capsys, write, tmp_path):
    spec = {"t0_edges": [[0, 1]], "unit_of": {"0": "P2_UNIT", "1": "STAR_UNIT"}, "appended": {"1.a": 1}}
    f = write("spec.json", json.dumps(spec))
    edges_path = tmp_path / "member.edges"
    code, out, _ = run(capsys, "family", "build", f, "--output", str(edges_path))
    doc = json.loads(out)
    T = parse_edge_list(doc["edge_list"])
    assert code == 0 and T.n == 8 and edges_path.read_text() == doc["edge_list"]
    assert set(doc["certificate"]) >= {"A", "B", "B1", "C1", "C2", "L1", "unit_partition", "appended_p2s"}

    code, out, _ = run(capsys, "family", "recognize", str(edges_path))
    assert code == 0 and len(json.loads(out)["A"]) == 2

    code, out, _ = run(capsys, "family", "recognize", write("p10.edges", serialize_edge_list(path(10))))
    assert code == 1 and out.strip() == "reject"
    assert run(capsys, "family", "recognize", write("p5.edges", serialize_edge_list(path(5))))[0] == 3


def test_family_build_errors(capsys, write):
    assert run(capsys, "family", "build", write("x.json", "{not json"))[0] == 2
    assert run(capsys, "family", "build", write("y.json", '{"t0_edges": []}'))[0] == 2
    bad = {"t0_edges": [], "unit_of": {"0": "P2_UNIT"}, "appended": {"0.a": 1}}
    assert run(capsys, "family", "build", write("z.json", json.dumps(bad)))[0] == 2


def test_bgraphs(capsys, tmp_path):
    code, out, _ = run(capsys, "bgraphs", "--write-dir", str(tmp_path / "named"))
    assert code == 0 and json.loads(out)["passed"]
    files = sorted(p.name for p in (tmp_path / "named").iterdir())
    assert files == ["b1.edges", "b2.edges", "b3.edges", "b4.edges", "b5.edges", "c5.edges"]
    assert parse_edge_list((tmp_path / "named" / "b2.edges").read_text()).m == 7


def test_spanning_check(capsys, write):
    code, out, _ = run(capsys, "spanning-check")
    assert code == 0 and json.loads(out)["totals"]["mismatches"] == 0
    assert run(capsys, "spanning-check", write("c6.edges", serialize_edge_list(cycle(6))))[0] == 0
    assert run(capsys, "spanning-check", write("k15.edges", serialize_edge_list(star(5))))[0] == 1
    assert run(capsys, "spanning-check", write("split.edges", "4\n0 1\n"))[0] == 3


def test_module_entry_point():
    import subprocess
    import sys

    proc = subprocess.run([sys.executable, "-m", "ntdom", "enumerate-trees", "5"], capture_output=True, text=True)
    assert proc.returncode == 0 and len(parse_edge_list_documents(proc.stdout)) == 3
