import io
import json
import os
import subprocess
import sys

import pytest

from weightstar.cli import main
from weightstar.code import minimum_distance
from weightstar.textio import parse_code

GOLAY_ENUM = "x^11 + 132x^6y^5 + 132x^5y^6 + 330x^3y^8 + 110x^2y^9 + 24y^11"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_weights_family(capsys):
    code, out, _ = run(capsys, "weights", "family", "ternary_golay")
    assert code == 0
    assert out.splitlines()[1] == f"W(x,y) = {GOLAY_ENUM}"
    assert json.loads(out.splitlines()[0])["A"] == [1, 0, 0, 0, 0, 132, 132, 0, 330, 110, 0, 24]
    code, out, _ = run(capsys, "weights", "family", "simplex", "2", "3")
    assert '"A":[1,0,0,0,7,0,0,0]' in out


def test_weights_from_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("q=2 k=2 n=4\n1 0 1 1\n0 1 0 1\n"))
    code, out, _ = run(capsys, "weights", "-")
    assert code == 0 and json.loads(out.splitlines()[0])["A"] == [1, 0, 1, 2, 0]


def test_weights_from_file_with_json(capsys, tmp_path):
    src = tmp_path / "c.txt"
    src.write_text("q=3 k=1 n=3\n1 1 1\n")
    dest = tmp_path / "out.json"
    code, _, _ = run(capsys, "weights", str(src), "--json", str(dest))
    assert code == 0
    assert json.loads(dest.read_text())["A"] == [1, 0, 0, 2]


def _star(capsys, *argv):
    code, out, _ = run(capsys, "star", *argv)
    assert code == 0
    lines = out.splitlines()
    return parse_code("\n".join(lines[:-1])), json.loads(lines[-1])


def test_star_golay(capsys):
    from weightstar import weight_distribution

    C, summary = _star(capsys, "family", "ternary_golay", "9", "--proj")
    assert (C.n, C.k) == (55, 5)
    assert summary["proj_length"] == 55
    assert weight_distribution(C).as_dict() == {0: 1, 36: 220, 45: 22}
    C, _ = _star(capsys, "family", "ternary_golay", "-w", "11", "--proj")
    assert (C.n, C.k) == (12, 6)
    C, _ = _star(capsys, "family", "two_disjoint_subspaces", "2", "2", "-w", "2", "--proj")
    assert (C.n, C.k, minimum_distance(C)) == (6, 4, 2)


def test_star_errors(capsys):
    assert run(capsys, "star", "family", "ternary_golay")[0] == 2
    assert run(capsys, "star", "family", "ternary_golay", "7")[0] == 2
    assert run(capsys, "star", "family", "ternary_golay", "9", "-w", "9")[0] == 2


def test_dual_complement_family(capsys):
    code, out, _ = run(capsys, "dual", "family", "simplex", "2", "3")
    D = parse_code(out)
    assert code == 0 and (D.n, D.k) == (7, 4)
    code, out, _ = run(capsys, "complement", "family", "two_disjoint_subspaces", "2", "2")
    C = parse_code(out)
    assert (C.n, C.k) == (9, 4)
    code, out, _ = run(capsys, "family", "hyperoval", "4")
    assert out.startswith("q=4 k=3 n=6 modulus=")


def test_puncture_and_shorten(capsys):
    code, out, _ = run(capsys, "puncture", "family", "ternary_golay", "0", "--coords", "1,2")
    C = parse_code(out)
    assert code == 0 and (C.n, C.k) == (8, 6)
    code, out, _ = run(capsys, "shorten", "family", "ternary_golay", "--coords", "0,1")
    C = parse_code(out)
    assert (C.n, C.k) == (9, 4)
    assert run(capsys, "shorten", "family", "ternary_golay")[0] == 2
    assert run(capsys, "puncture", "family", "ternary_golay", "11")[0] == 2


def test_analyze_two_weight(capsys):
    code, out, _ = run(capsys, "analyze-two-weight", "7", "3", "2", "3", "5")
    assert code == 1 and json.loads(out)["feasible"] is False
    code, out, _ = run(capsys, "analyze-two-weight", "112", "6", "3", "72", "81")
    rep = json.loads(out)
    assert code == 0
    assert rep["prediction"]["w1"]["length"] == 252
    code, out, _ = run(capsys, "analyze-two-weight", "family", "hyperoval", "4")
    rep = json.loads(out)
    assert code == 0
    assert rep["checks"]["observed_vs_predicted"]["verdict"] == "pass"
    # a [7,3,5] code over GF(4) would be MDS beyond length q + 2
    assert rep["extendable_observed"] is False is rep["extendable_predicted"]
    assert rep["checks"]["extendability"]["verdict"] == "pass"
    code, out, _ = run(capsys, "analyze-two-weight", "family", "ternary_golay")
    assert code == 1 and json.loads(out)["two_weight"] is False


def test_exit_codes(capsys, tmp_path):
    assert run(capsys, "weights", "family", "ternary_golay", "--guard", "100")[0] == 3
    assert run(capsys, "verify", "no-such-suite")[0] == 2
    assert run(capsys, "weights", str(tmp_path / "missing.txt"))[0] == 2
    assert run(capsys, "weights", "family", "nope")[0] == 2
    assert run(capsys, "weights", "family", "simplex", "2")[0] == 2
    assert run(capsys, "weights", "family", "simplex", "2", "x")[0] == 2
    assert run(capsys, "weights")[0] == 2
    with pytest.raises(SystemExit) as e:
        main(["no-such-command"])
    assert e.value.code == 2


def test_guard_from_environment(capsys, monkeypatch):
    from weightstar import _config

    monkeypatch.setenv("WEIGHTSTAR_GUARD", "100")
    _config.set_guard(None)
    assert run(capsys, "weights", "family", "ternary_golay")[0] == 3
    monkeypatch.delenv("WEIGHTSTAR_GUARD")
    assert run(capsys, "weights", "family", "ternary_golay")[0] == 0


def test_verify_macwilliams_with_distribution(capsys, tmp_path):
    good = tmp_path / "good.json"
    good.write_text('{"n":7,"k":3,"q":2,"A":[1,0,0,0,7,0,0,0]}')
    code, out, _ = run(capsys, "verify", "macwilliams", "--dist", str(good))
    assert code == 0 and json.loads(out)["ok"]
    bad = tmp_path / "bad.json"
    bad.write_text('{"n":7,"k":3,"q":2,"A":[1,0,0,1,6,0,0,0]}')
    code, out, _ = run(capsys, "verify", "macwilliams", "--dist", str(bad))
    rep = json.loads(out)
    assert code == 1 and not rep["ok"]
    assert all(c["witness"] for c in rep["checks"] if c["verdict"] == "fail")
    assert run(capsys, "verify", "pless", "--dist", str(good))[0] == 2
    assert run(capsys, "verify", "macwilliams", "--dist", str(tmp_path / "none.json"))[0] == 2


def test_verify_suites(capsys, tmp_path):
    code, out, _ = run(capsys, "verify", "dual-2wt", "--no-corpus")
    rep = json.loads(out)
    assert code == 0 and rep["ok"] and rep["summary"]["pass"] > 0
    assert "ms" not in rep["checks"][0]
    grid = tmp_path / "grid.json"
    grid.write_text('["hyperoval(4)", ["simplex", 2, 3], {"name": "two_disjoint_subspaces", "params": [2, 2]}]')
    code, out, err = run(capsys, "verify", "extendability", "--grid", str(grid), "--timing")
    rep = json.loads(out)
    assert code == 0 and rep["ok"]
    assert "ms" in rep["checks"][0] and "elapsed" in err


def test_output_is_deterministic(tmp_path):
    env = dict(os.environ)
    env.pop("WEIGHTSTAR_GUARD", None)
    cmd = [sys.executable, "-m", "weightstar.cli", "star", "family", "hyperoval", "8", "8", "--proj"]
    a = subprocess.run(cmd, env=env, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, env=env, capture_output=True, check=True).stdout
    assert a == b and a.startswith(b"q=8 k=3 n=")
