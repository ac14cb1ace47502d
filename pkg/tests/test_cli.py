import json
import subprocess
import sys

import pytest

from ptmaxcut.cli import main
from ptmaxcut.generators import odd_clique
from ptmaxcut.io import read_graph, write_graph


@pytest.fixture
def k3(tmp_path):
    p = tmp_path / "k3.graph"
    write_graph(odd_clique(1), p)
    return str(p)


@pytest.fixture
def k5(tmp_path):
    p = tmp_path / "k5.graph"
    write_graph(odd_clique(2), p)
    return str(p)


def test_decide(k3, capsys):
    assert main(["decide", "-k", "0", k3]) == 0
    assert capsys.readouterr().out.strip() == "yes"
    assert main(["decide", "-k", "1", k3]) == 1
    assert capsys.readouterr().out.strip() == "no"
    assert main(["decide", "--quarters", "1", k3]) == 1
    assert main(["decide", "--target", "2", k3]) == 0


def test_bound(k5, capsys):
    assert main(["bound", k5]) == 0
    assert capsys.readouterr().out.strip() == "PT=24/4 (=6), EE=24/4 (=6)"


def test_oracle(k5, capsys):
    assert main(["oracle", k5]) == 0
    assert json.loads(capsys.readouterr().out) == {"value": 6, "side1": [2, 3]}


def test_solve_emits_cut(k5, tmp_path, capsys):
    out = tmp_path / "cut.json"
    assert main(["solve", "--target", "6", "--emit-cut", str(out), k5]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "yes"
    rec = json.loads(lines[1])
    assert rec["value"] == 6 and json.loads(out.read_text()) == rec
    assert main(["solve", "--target", "7", k5]) == 1
    assert capsys.readouterr().out.strip() == "no"


def test_trace(k5, capsys):
    assert main(["trace", "-k", "1", k5]) == 0
    recs = [json.loads(line) for line in capsys.readouterr().out.splitlines()]
    assert recs[0]["rule"] == 2 and recs[0]["witnesses"] == {"X": [2, 3, 4, 5], "v": 1}


def test_gen(tmp_path):
    out = tmp_path / "r.graph"
    assert main(["gen", "random", "n=12", "m=20", "wmax=3", "--seed", "4", "-o", str(out)]) == 0
    first = out.read_text()
    assert main(["gen", "random", "n=12", "m=20", "wmax=3", "--seed", "4", "-o", str(out)]) == 0
    assert out.read_text() == first
    assert read_graph(out).m == 20
    assert main(["gen", "rule-gallery", "rule=7", "-o", str(out)]) == 0
    assert main(["gen", "obs6-tree", "i=4", "-o", str(out)]) == 0
    assert read_graph(out).total_weight == 8


def test_errors_exit_2(tmp_path, capsys):
    bad = tmp_path / "bad.graph"
    bad.write_text("e 1 1 1\n")
    assert main(["bound", str(bad)]) == 2
    assert "line 1: self-loop" in capsys.readouterr().err
    assert main(["bound", str(tmp_path / "missing")]) == 2
    assert main(["gen", "odd-clique", "t=0", "-o", str(bad)]) == 2
    assert main(["gen", "odd-clique", "t", "-o", str(bad)]) == 2
    assert main(["gen", "random", "n=3", "-o", str(bad)]) == 2
    with pytest.raises(SystemExit) as info:
        main(["decide", str(bad)])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main(["frobnicate"])
    assert info.value.code == 2


def test_module_entry_point(k3):
    res = subprocess.run([sys.executable, "-m", "ptmaxcut", "decide", "-k", "1", k3],
                         capture_output=True, text=True)
    assert res.returncode == 1 and res.stdout.strip() == "no"
