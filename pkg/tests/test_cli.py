import json
import subprocess
import sys

import pytest

from linealliance.cli import main
from linealliance.graph import GraphFamily, encode_graph6, generate


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def g6_file(tmp_path, name, family, *params):
    return write(tmp_path, name, encode_graph6(generate(GraphFamily(family, params))) + "\n")


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_compute_c5(tmp_path, capsys):
    path = g6_file(tmp_path, "c5.g6", "cycle", 5)
    code, out, _ = run(capsys, "compute", "--input", path, "--kind", "defensive")
    assert code == 0
    res = json.loads(out)
    assert res["value"] == 2 and res["status"] == "optimal"


def test_compute_line_k4_with_oracle(tmp_path, capsys):
    path = g6_file(tmp_path, "k4.g6", "complete", 4)
    code, out, _ = run(capsys, "compute", "--input", path, "--kind", "defensive", "--line", "--oracle")
    res = json.loads(out)
    assert code == 0
    assert res["value"] == 3 and res["oracle"]["agree"]
    assert len(res["witness_edges"]) == 3


def test_compute_edge_list_input(tmp_path, capsys):
    path = write(tmp_path, "p4.txt", "0 1\n1 2\n2 3\n")
    code, out, _ = run(capsys, "compute", "--input", path, "--kind", "defensive")
    assert code == 0 and json.loads(out)["witness"] == [0]


@pytest.mark.parametrize("content, name", [
    ("C!\n", "bad.g6"),
    ("0 0\n", "loop.txt"),
    ("C~\nC~\n", "two.g6"),
])
def test_input_errors_exit_2(tmp_path, capsys, content, name):
    code, out, err = run(capsys, "compute", "--input", write(tmp_path, name, content), "--kind", "strong")
    assert code == 2 and out == "" and err.startswith("error:")


def test_missing_file_exit_2(tmp_path, capsys):
    code, _, err = run(capsys, "bounds", "--input", str(tmp_path / "nope.g6"))
    assert code == 2 and "cannot read" in err


def test_infeasible_exit_3(tmp_path, capsys):
    path = write(tmp_path, "two.txt", "0 1\n2 3\n")
    code, _, err = run(capsys, "compute", "--input", path, "--kind", "global-connected-defensive")
    assert code == 3 and "connected" in err


def test_budget_exit_4(tmp_path, capsys):
    path = g6_file(tmp_path, "p.g6", "petersen")
    code, out, _ = run(capsys, "compute", "--input", path, "--kind", "global-connected-strong", "--budget-nodes", "3")
    assert code == 4
    res = json.loads(out)
    assert res["status"] == "lower-bound-only" and res["certified"] is False


def test_budget_env(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("ALLIANCE_BUDGET_NODES", "3")
    path = g6_file(tmp_path, "p.g6", "petersen")
    code, _, _ = run(capsys, "compute", "--input", path, "--kind", "global-strong")
    assert code == 4


def test_linegraph_claw(tmp_path, capsys):
    path = g6_file(tmp_path, "k13.g6", "star", 3)
    out_path = tmp_path / "l.g6"
    code, out, _ = run(capsys, "linegraph", "--input", path, "--output", str(out_path))
    res = json.loads(out)
    assert code == 0
    assert res["graph6"] == "Bw"
    assert res["edge_map"] == {"0": [0, 1], "1": [0, 2], "2": [0, 3]}
    assert out_path.read_text() == "Bw\n"
    assert json.loads(out_path.with_suffix(".json").read_text()) == res["edge_map"]


def test_bounds_k23(tmp_path, capsys):
    path = g6_file(tmp_path, "k23.g6", "complete-bipartite", 2, 3)
    code, out, _ = run(capsys, "bounds", "--input", path)
    rep = json.loads(out)
    assert code == 0
    semi = {e["target"]: (e["lower"], e["upper"]) for e in rep["entries"] if e["id"] == "semiregular-exact"}
    assert semi == {"a(L)": (2, 2), "â(L)": (3, 3)}


def test_bounds_pretty(tmp_path, capsys):
    path = g6_file(tmp_path, "k23.g6", "complete-bipartite", 2, 3)
    code, out, _ = run(capsys, "bounds", "--input", path, "--pretty")
    assert code == 0 and "semiregular-exact" in out


def test_classify(tmp_path, capsys):
    path = g6_file(tmp_path, "c6.g6", "cycle", 6)
    code, out, _ = run(capsys, "classify", "--input", path)
    res = json.loads(out)
    assert code == 0
    assert res["graph"]["class"] == "2" and res["line"]["class"] == "2"


def test_generate_cycle(capsys):
    code, out, _ = run(capsys, "generate", "--family", "cycle", "--n", "8")
    assert code == 0 and out == encode_graph6(generate(GraphFamily("cycle", (8,)))) + "\n"
    code, out, _ = run(capsys, "generate", "--family", "cycle", "--n", "3", "--format", "edgelist")
    assert out == "n 3\n0 1\n0 2\n1 2\n"


def test_generate_bad_params(capsys):
    code, _, err = run(capsys, "generate", "--family", "kneser", "--n", "5")
    assert code == 2 and "--k" in err


def test_verify_star_erratum(capsys):
    code, out, _ = run(capsys, "verify", "--star-erratum")
    res = json.loads(out)
    assert code == 0
    row = next(r for r in res["rows"] if r["graph"] == "K_{1,4}")
    assert row["a(L)"] == 2 and row["value n-1"] == 3 and not row["n-1 holds"]


def test_verify_small(capsys, tmp_path):
    report = tmp_path / "r.json"
    code, out, _ = run(capsys, "verify", "--max-n", "4", "--report", str(report))
    res = json.loads(out)
    assert code == 0 and res["ok"] and res["summary"]["graphs"] == 10
    assert json.loads(report.read_text()) == res


def test_verify_unknown_check(capsys):
    code, _, err = run(capsys, "verify", "--max-n", "3", "--checks", "bogus")
    assert code == 2 and "bogus" in err


def test_verify_o5_regular(capsys):
    code, out, _ = run(capsys, "verify", "--family", "odd-graph", "--n", "5", "--checks", "regular-corollary")
    res = json.loads(out)
    assert code == 0
    values = res["graphs"][0]["values"]
    assert values["a(L)"] == 5 and values["â(L)"] == 5


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "linealliance", "generate", "--family", "petersen"],
                          capture_output=True, text=True, check=True)
    assert proc.stdout.strip() == encode_graph6(generate(GraphFamily("petersen")))
