import json
import subprocess
import sys

import pytest

from gaindex.cli import main
from gaindex.families import construct_complete_bipartite, construct_example_210
from gaindex.formats import parse_graph6, write_graph6


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--json")
    return code, json.loads(out)


@pytest.fixture
def c4_edges(tmp_path):
    p = tmp_path / "c4.txt"
    p.write_text("n 4\n0 1\n1 2\n2 3\n3 0\n")
    return str(p)


@pytest.fixture
def ex210(tmp_path):
    p = tmp_path / "ex.g6"
    p.write_bytes(write_graph6(construct_example_210()) + b"\n")
    return str(p)


def test_compute_cycle(capsys, c4_edges):
    code, doc = run_json(capsys, "compute", "--format", "edgelist", c4_edges)
    assert code == 0
    g = doc["graphs"][0]
    assert g["ga1"] == 4
    assert g["classic_bounds"] == {"lower": 4, "upper": 4}
    assert doc["options"]["format"] == "edgelist"


def test_compute_graph6(capsys, tmp_path, ex210):
    p = tmp_path / "k23.g6"
    p.write_bytes(write_graph6(construct_complete_bipartite(2, 3)))
    code, doc = run_json(capsys, "compute", str(p), ex210)
    assert code == 0
    k23, ex = doc["graphs"]
    assert k23["ga1"] == pytest.approx(5.8788, abs=5e-5)
    assert ex["ga1"] == pytest.approx(110.8776, abs=5e-5)
    assert ex["best_lower_bound"]["theorem_id"] == "T2_7"
    assert ex["best_lower_bound"]["value"] == pytest.approx(69.8443, abs=5e-5)


def test_compute_parse_error(capsys, tmp_path):
    p = tmp_path / "bad.g6"
    p.write_text("C}\nC\n")
    code, out, err = run(capsys, "compute", str(p))
    assert code == 2
    assert "line 2" in err and str(p) in err


def test_compute_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "compute", str(tmp_path / "nope"))
    assert code == 2 and "nope" in err


def test_construct(capsys, tmp_path):
    code, doc = run_json(capsys, "construct", "gdd", "2", "3")
    assert code == 0
    assert doc["ga1"] == pytest.approx(4.9192, abs=5e-5) and doc["closed_form"] == doc["ga1"]
    assert parse_graph6(doc["graph"].strip()).m == 5
    code, doc = run_json(capsys, "construct", "kdd", "4", "56")
    assert doc["closed_form"] == pytest.approx(111.7508, abs=5e-5)
    out = tmp_path / "h.txt"
    code, doc = run_json(capsys, "construct", "hdelta", "5", "--format", "edgelist", "--out", str(out))
    assert code == 0 and out.read_text().startswith("n 6\n") and "graph" not in doc


def test_construct_infeasible(capsys):
    code, _, err = run(capsys, "construct", "hdelta", "4")
    assert code == 2 and "odd" in err
    code, _, err = run(capsys, "construct", "gdd", "2")
    assert code == 2


@pytest.mark.parametrize("delta, Delta, tid, value", [
    (2, 3, "T2_11_odd", 4.9192), (4, 56, "T2_7", 69.8443), (2, 30, "T2_20", 29.047),
])
def test_bounds(capsys, delta, Delta, tid, value):
    code, doc = run_json(capsys, "bounds", "--delta", str(delta), "--Delta", str(Delta))
    assert code == 0
    assert doc["best"]["theorem_id"] == tid
    assert doc["best"]["value"] == pytest.approx(value, abs=5e-4)
    assert len(doc["bounds"]) == 11


def test_bounds_from_graph(capsys, ex210):
    code, doc = run_json(capsys, "bounds", "--graph", ex210)
    assert (doc["delta"], doc["Delta"], doc["m"]) == (4, 56, 166)
    assert doc["bounds"][-1]["applicable"]


def test_bounds_errors(capsys):
    assert run(capsys, "bounds", "--delta", "5", "--Delta", "3")[0] == 2
    assert run(capsys, "bounds", "--delta", "5")[0] == 2


def test_verify(capsys):
    code, doc = run_json(capsys, "verify", "T2_7", "--n-max", "6", "--jobs", "1")
    assert code == 0 and doc["report"]["passed"]
    assert list(doc["report"])[:3] == ["theorem_id", "graphs_checked", "graphs_gated"]
    assert run(capsys, "verify", "P2_5_edges", "--n-max", "7", "--jobs", "1")[0] == 0
    code, _, err = run(capsys, "verify", "T2_20", "--n-max", "7")
    assert code == 2 and "spotcheck" in err
    assert run(capsys, "verify", "T2_7", "--n-max", "12")[0] == 2


def test_verify_failure_exit_code(capsys, monkeypatch):
    import gaindex.cli as cli
    from gaindex.harness.verify import VerificationReport

    bad = VerificationReport("T2_7", 1, 0, [("C~", 1.0, 2.0)])
    monkeypatch.setattr(cli, "verify_range", lambda *a, **k: bad)
    code, out, _ = run(capsys, "verify", "T2_7", "--n-max", "4")
    assert code == 1 and "FAIL" in out
    with pytest.raises(SystemExit) as exc:
        main(["verify", "T2_7", "--tolerance", "-1"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_verify_external_stream(capsys, tmp_path):
    p = tmp_path / "s.g6"
    p.write_text("C}\nC~\nCs\n")
    code, doc = run_json(capsys, "verify", "C2_13", "--input", str(p))
    assert code == 0 and doc["report"]["graphs_checked"] == 3
    assert doc["report"]["equality_witnesses"] == ["Cs", "C}", "C~"]


def test_verify_deterministic_json(capsys):
    argv = ["verify", "C2_13", "--n-max", "5", "--jobs", "1", "--json"]
    a = run(capsys, *argv)[1]
    b = run(capsys, *argv)[1]
    assert a == b


def test_search(capsys):
    code, doc = run_json(capsys, "search", "counterexample-2-2", "--delta", "4", "--Delta", "56", "--n-max", "6")
    assert code == 0
    assert doc["witnesses"][0]["margin"] == pytest.approx(0.873, abs=1e-3)
    code, doc = run_json(capsys, "search", "minimal", "--delta", "2", "--Delta", "3", "--n-max", "5")
    assert code == 0 and doc["witnesses"] == ["C}"]
    assert run(capsys, "search", "minimal", "--delta", "5", "--Delta", "3")[0] == 2
    assert run(capsys, "search", "minimal", "--delta", "2..3", "--Delta", "3")[0] == 2


def test_spotcheck(capsys):
    code, doc = run_json(capsys, "spotcheck", "--Delta", "28..40")
    assert code == 0 and doc["report"]["passed"]
    assert run(capsys, "spotcheck", "--Delta", "27")[0] == 2


def test_float_formatting(capsys):
    _, out, _ = run(capsys, "bounds", "--delta", "2", "--Delta", "3", "--json")
    assert '"value": 4.919183588' in out


def test_console_script(tmp_path):
    out = subprocess.run([sys.executable, "-m", "gaindex.cli", "construct", "gdd", "2", "3"],
                         capture_output=True, text=True, check=True).stdout
    assert "4.919183588" in out
