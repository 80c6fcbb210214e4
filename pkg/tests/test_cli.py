from __future__ import annotations

import json
import subprocess
import sys

import pytest

from periplectic.cli import main, parse_tag, UsageError
from periplectic.suites import RunConfig, run_suites


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv)
    return code, json.loads(out)


def test_structure_dims(capsys):
    code, data = run_json(capsys, "structure", "--n", "2", "--p", "5")
    assert code == 0
    assert data["dims"] == {"-1": 1, "0": 4, "1": 3}
    assert data["timing"] is None
    assert {c["name"]: c["status"] for c in data["checks"]}["structure.jacobi"] == "pass"


def test_structure_rank_three_jacobi(capsys):
    code, out, _ = run(capsys, "structure", "--n", "3", "--p", "7", "--output", "table")
    assert code == 0
    assert any(line.startswith("PASS") and "structure.jacobi" in line for line in out.splitlines())


@pytest.mark.parametrize("argv", [
    ["structure", "--p", "4"],
    ["structure", "--p", "3"],
    ["structure", "--n", "1"],
    ["verify", "--suite", "bogus"],
    ["frobnicate"],
    [],
    ["module", "--dump-module", "Q(1,0)"],
    ["module", "--dump-module", "L(1,0,0)"],
    ["expr", "q(1,2)"],
])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err


def test_weights_table(capsys):
    code, data = run_json(capsys, "weights", "--n", "2", "--p", "5")
    assert code == 0
    assert len(data["rows"]) == 25
    assert data["atypical"] == 10
    assert data["classes"] == 15
    row = next(r for r in data["rows"] if r["weight"] == "0,0")
    assert row["theta"] == 0 and row["delta"] == 0 and not row["typical"]
    code, out, _ = run(capsys, "weights", "--output", "table")
    assert "25 weights, 10 atypical, 15 linkage classes" in out


def test_verify_kac(capsys):
    code, data = run_json(capsys, "verify", "--suite", "kac", "--n", "2", "--p", "5")
    assert code == 0
    checks = {c["name"]: c for c in data["checks"]}
    simple = checks["kac.simple_when_delta_nonzero"]["details"]
    assert simple["delta_nonzero"] == simple["simple"] == 20


def test_verify_linkage(capsys):
    code, data = run_json(capsys, "verify", "--suite", "linkage")
    assert code == 0
    (thm,) = [c for c in data["checks"] if c["name"] == "center.linkage_theorem"]
    assert thm["details"]["pairs"] == 625
    assert thm["details"]["counterexamples"] == 0


def test_center_suite_is_gated(capsys):
    code, data = run_json(capsys, "verify", "--suite", "center", "--n", "3", "--p", "7")
    assert code == 3
    assert [c["status"] for c in data["checks"]] == ["inconclusive"]


def test_large_kac_sweep_is_capped(capsys):
    code, data = run_json(capsys, "verify", "--suite", "kac", "--n", "3", "--p", "7")
    assert code == 3
    assert {c["status"] for c in data["checks"]} == {"inconclusive"}


def test_failing_suite_exit_code(capsys):
    # the center suite reports the [y, u] obstruction as a failure
    code, data = run_json(capsys, "verify", "--suite", "center")
    assert code == 1
    status = {c["name"]: c["status"] for c in data["checks"]}
    assert status["center.super_centrality"] == "fail"
    assert status["center.theta_inclusion"] == "pass"


def test_determinism_and_timing(capsys):
    argv = ["verify", "--suite", "typical", "--seed", "42"]
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second
    assert json.loads(first)["timing"] is None
    _, timed = run_json(capsys, *argv, "--timing")
    assert timed["timing"]["seconds"] >= 0


def test_worker_pool_gives_same_report():
    cfg = RunConfig(2, 5, seed=1)
    seq = run_suites(["structure", "linkage"], cfg, workers=1)
    par = run_suites(["structure", "linkage"], cfg, workers=2)
    assert json.dumps(seq.to_json(), sort_keys=True) == json.dumps(par.to_json(), sort_keys=True)


def test_run_config_validation():
    with pytest.raises(ValueError):
        RunConfig(2, 9)
    with pytest.raises(ValueError):
        RunConfig(1, 5)


def test_module_dump(capsys):
    code, data = run_json(capsys, "module", "--dump-module", "K(L(1,0))", "--matrices")
    assert code == 0
    assert data["tag"] == "K(L(1,0))"
    assert data["dim"] == 4
    assert data["grading"] == [0, 0, 1, 1]
    assert set(data["matrices"]) == {"y(1,2)", "e(2,1)", "h(1)", "h(2)", "e(1,2)",
                                     "z(1,1)", "z(1,2)", "z(2,2)"}
    code, data = run_json(capsys, "module", "--dump-module", "Z(0,0)")
    assert data["dim"] == 10 and "matrices" not in data


@pytest.mark.parametrize("tag,kind,mu", [
    ("L(1,0)", "L", (1, 0)),
    ("K(3,4)", "K", (3, 4)),
    ("K(L(3,4))", "K", (3, 4)),
    ("Z0(2,2)", "Z0", (2, 2)),
    ("Z(6,0)", "Z", (1, 0)),
])
def test_parse_tag(tag, kind, mu):
    assert parse_tag(tag, 2, 5) == (kind, mu)


def test_parse_tag_rejects_nesting_for_other_kinds():
    with pytest.raises(UsageError):
        parse_tag("L(L(1,0))", 2, 5)


def test_expr(capsys):
    code, data = run_json(capsys, "expr", "z(1,2)*y(1,2)")
    assert code == 0
    assert data["normal_form"] == "h(2) + 4*h(1) + 4*y(1,2).z(1,2)"
    assert set(data["z_grades"]) == {"0"}
    code, out, _ = run(capsys, "expr", "z(1,1).z(1,2)", "--mode", "quotient", "--output", "table")
    assert out.strip() == "0"


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "periplectic.cli", "structure", "--output", "table"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert "overall pass" in proc.stdout
