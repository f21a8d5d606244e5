import json

import pytest

from kneserhom.cli import main
from kneserhom.graph import complete_graph, cycle_graph
from kneserhom.io import read_graph, write_graph


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out)


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, G in [("c5", cycle_graph(5)), ("c9", cycle_graph(9)), ("k3", complete_graph(3)), ("k4", complete_graph(4))]:
        paths[name] = str(tmp_path / f"{name}.json")
        write_graph(G, paths[name])
    return paths


def test_gen(capsys, tmp_path):
    code, out = run_json(capsys, "gen", "--family", "kneser", "--n", "5", "--k", "2")
    assert code == 0 and out["vertices"] == 10 and out["edges"] == 15
    code, out = run_json(capsys, "gen", "--family", "schrijver", "--n", "7", "--k", "3", "--out", str(tmp_path / "s.json"))
    assert code == 0 and read_graph(tmp_path / "s.json").n == 7
    code, _ = run_json(capsys, "gen", "--n", "5", "--k", "2", "--out", str(tmp_path / "p.dot"))
    assert '[label="{0,1}"]' in (tmp_path / "p.dot").read_text()


def test_gen_bad_params(capsys):
    code, _ = run(capsys, "gen", "--n", "3", "--k", "2")
    assert code == 2


def test_gen_cap(capsys, monkeypatch):
    monkeypatch.setenv("KNESERHOM_VERTEX_CAP", "10")
    code, _ = run(capsys, "gen", "--n", "7", "--k", "3")
    assert code == 3


def test_formula(capsys):
    assert run_json(capsys, "formula", "--what", "odd-girth", "--n", "7", "--k", "3")[1]["value"] == 7
    assert run_json(capsys, "formula", "--what", "chi-frac", "--n", "7", "--k", "3")[1]["value"] == "7/3"
    assert run_json(capsys, "formula", "--what", "schrijver-count", "--n", "5", "--k", "2")[1]["value"] == 5
    assert run(capsys, "formula", "--what", "odd-girth", "--n", "4", "--k", "2")[0] == 2


def test_hom(capsys, files):
    code, out = run_json(capsys, "hom", "--from", files["c9"], "--to", files["c5"])
    assert code == 0 and len(out["value"]) == 9
    code, out = run_json(capsys, "hom", "--from", files["c5"], "--to", files["c9"])
    assert code == 0 and out["value"] is None


def test_hom_budget(capsys, tmp_path):
    from kneserhom.kneser import kneser_graph

    write_graph(kneser_graph(7, 2).graph, tmp_path / "k72.json")
    write_graph(complete_graph(4), tmp_path / "k4.json")
    code, _ = run(capsys, "hom", "--from", str(tmp_path / "k72.json"), "--to", str(tmp_path / "k4.json"), "--budget", "3")
    assert code == 3


def test_invariant(capsys, files):
    code, out = run_json(capsys, "invariant", "--graph", files["c5"], "--what", "chi-frac")
    assert code == 0 and out["value"] == "5/2" and out["certificate"]["fold_coloring"]["k"] == 2
    assert run_json(capsys, "invariant", "--graph", files["c5"], "--what", "chi", "--expect", "3")[0] == 0
    assert run_json(capsys, "invariant", "--graph", files["c5"], "--what", "chi", "--expect", "2")[0] == 1
    assert run_json(capsys, "invariant", "--graph", files["c5"], "--what", "alpha")[1]["value"] == 2
    assert run_json(capsys, "invariant", "--graph", files["k4"], "--what", "girth")[1]["value"] == 3


def test_invariant_missing_file(capsys, tmp_path):
    assert run(capsys, "invariant", "--graph", str(tmp_path / "nope.json"), "--what", "chi")[0] == 2


def test_ball_graph_and_tree_hom(capsys, tmp_path):
    code, out = run_json(capsys, "ball-graph", "--d", "2", "--g", "1", "--out", str(tmp_path / "h.json"))
    assert code == 0 and out["vertices"] == 12 and out["odd_girth"] == 3 and out["four_cycle"]
    code, out = run_json(capsys, "tree-hom", "--d", "3", "--g", "1", "--depth", "4")
    assert code == 0 and out["valid"]


def test_kfold(capsys, files):
    code, out = run_json(capsys, "kfold", "--graph", files["c9"], "--d", "2", "--k", "3")
    assert code == 0 and out["n"] == 7 and out["valid"]
    assert run(capsys, "kfold", "--graph", files["c5"], "--d", "2", "--k", "3")[0] == 2


def test_words(capsys):
    code, out = run_json(capsys, "sphere", "--d", "4", "--l", "3")
    assert code == 0 and out["size"] == 108
    code, out = run_json(capsys, "sigma", "--tau", "2,0")
    assert code == 0 and out["length"] == 3 and len(out["chain"]) == 4
    assert run(capsys, "sigma", "--tau", "1,1")[0] == 2


def test_g0(capsys):
    for check in ("involution", "prefix", "labels"):
        code, out = run_json(capsys, "g0", "--L", "10", "--d", "3", "--seed", "1", "--check", check)
        assert code == 0 and out["passed"]
    assert run(capsys, "g0", "--L", "2", "--d", "3", "--check", "labels")[0] == 2


def test_witness(capsys, files):
    code, out = run_json(capsys, "witness", "--graph", files["k3"], "--d", "3")
    assert code == 0 and out["verdict"] and out["best_l"] == 0
    code, out = run_json(capsys, "witness-search", "--d", "3", "--m", "2", "--kmax", "64")
    assert code == 0 and out["k_min"] == 16 and out["mpmath"]["size_ok"]
    assert run(capsys, "witness-search", "--d", "3", "--m", "2", "--kmax", "8")[0] == 1
    assert run(capsys, "witness-search", "--d", "2", "--m", "2", "--kmax", "8")[0] == 2


def test_arith_check(capsys):
    code, out = run_json(capsys, "arith-check")
    assert code == 0 and all(c["status"] == "pass" for c in out["checks"])


def test_repro_quick(capsys, tmp_path):
    code, out = run(capsys, "repro", "--profile", "quick", "--json", str(tmp_path / "r.json"))
    assert code == 0 and "odd girth formula" in out
    report = json.loads((tmp_path / "r.json").read_text())
    assert len(report["checks"]) == 10
    assert all(set(c) == {"name", "status", "details"} for c in report["checks"])
