import io
import json

import pytest

from packnum.cli import main
from packnum.families import complete_graph, cycle_graph
from packnum.graph6 import emit_graph6, parse_graph6


def run(argv, stdin_text=None, monkeypatch=None):
    if stdin_text is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin_text))
    out = io.StringIO()
    code = main(argv, out)
    return code, out.getvalue()


@pytest.fixture
def g6file(tmp_path):
    def make(*graphs, text=None):
        path = tmp_path / "in.g6"
        path.write_text(text if text is not None else "".join(emit_graph6(g) + "\n" for g in graphs))
        return str(path)
    return make


def test_invariants_human(g6file):
    code, out = run(["invariants", g6file(cycle_graph(5), complete_graph(4))])
    assert code == 0
    lines = out.splitlines()
    assert "n=5 Δ=2 diam=2 ω=2 χ=3 α=2 χ_ρ=4" in lines[0]
    assert "n=4 Δ=3 diam=1 ω=4 χ=4 α=1 χ_ρ=4" in lines[1]


def test_invariants_json(g6file):
    code, out = run(["invariants", "--format", "json", g6file(cycle_graph(5))])
    (row,) = json.loads(out)
    assert code == 0 and row["chi_rho"] == 4 and row["diameter"] == 2


def test_invariants_stdin(monkeypatch):
    code, out = run(["invariants"], emit_graph6(cycle_graph(5)) + "\n", monkeypatch)
    assert code == 0 and "χ_ρ=4" in out


def test_empty_file(g6file):
    assert run(["invariants", g6file(text="")]) == (0, "")


def test_malformed(g6file, capsys):
    code, _ = run(["invariants", g6file(text="Dhc\nD\x01c\n")])
    assert code == 3
    assert "line 2" in capsys.readouterr().err


def test_missing_file(capsys):
    assert run(["invariants", "/nonexistent/x.g6"])[0] == 3


def test_packing_spec(g6file):
    path = g6file(cycle_graph(5))
    code, out = run(["packing", "--spec", "2,3,4,5", path])
    assert code == 0 and out.endswith("NONE\n")
    assert run(["packing", "--spec", "3,2", path])[0] == 3
    code, out = run(["packing", "--format", "json", path])
    assert json.loads(out)[0]["chi_rho"] == 4


def test_mycielski(g6file):
    code, out = run(["mycielski", g6file(complete_graph(2))])
    assert code == 0 and parse_graph6(out.strip()).n == 5
    code, out = run(["mycielski", "--bounds", g6file(complete_graph(3))])
    assert code == 0 and "χ_ρ(M)=5" in out and "FAIL" not in out


@pytest.mark.parametrize("argv,order", [
    (["--family", "mycielski-power", "--n", "2", "--k", "2"], 11),
    (["--family", "hclass", "--r", "3", "--s", "2"], 5),
    (["--family", "complete-bipartite", "--t", "3"], 6),
    (["--family", "gkl", "--params", "k=3,ell=4"], 7),
    (["--family", "kn-minus-star", "--n", "6", "--r", "2"], 6),
    (["--family", "cycle", "--n", "5"], 5),
])
def test_gen(argv, order):
    code, out = run(["gen", *argv])
    assert code == 0 and parse_graph6(out.strip()).n == order


def test_gen_errors():
    assert run(["gen", "--family", "cycle", "--n", "2"])[0] == 3
    assert run(["gen", "--family", "nope", "--n", "2"])[0] == 3
    assert run(["gen", "--family", "hclass", "--r", "3", "--s", "2", "--extra-edges", "x"])[0] == 3


def test_scan_conjecture():
    code, out = run(["scan", "--check", "conjecture-356", "--max-n", "5"])
    rep = json.loads(out)
    assert code == 0
    assert rep["searches"][0]["pattern"] == [3, 5, 6] and rep["searches"][0]["witness"] is None
    assert rep["undecided"] == []


def test_scan_all(tmp_path):
    path = tmp_path / "r.json"
    code, out = run(["scan", "--check", "all", "--max-n", "4", "--output", str(path)])
    rep = json.loads(path.read_text())
    assert code == 0 and out == ""
    assert {r["status"] for r in rep["per_theorem"]} <= {"VERIFIED_ON_CORPUS", "NOT_APPLICABLE"}


def test_scan_budget_undecided():
    code, out = run(["scan", "--check", "T2.4", "--max-n", "5", "--budget", "3", "--no-mtable"])
    assert code == 4 and json.loads(out)["undecided"]


def test_scan_bad_input(g6file):
    assert run(["scan", "--check", "T9.9", "--max-n", "3"])[0] == 3
    assert run(["scan", "--corpus", g6file(text="~~\n")])[0] == 3
    assert run(["scan", "--jobs", "0", "--max-n", "3"])[0] == 3


def test_mtable():
    code, out = run(["mtable"])
    assert code == 0 and out.startswith("a\\b")
    code, out = run(["mtable", "--format", "json", "--max-n", "5"])
    rows = {(r["a"], r["b"]): r for r in json.loads(out)}
    assert rows[(2, 3)]["lo"] == rows[(2, 3)]["hi"] == 4
