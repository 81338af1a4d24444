import json
import os
import subprocess
import sys
from importlib import resources
from pathlib import Path

import jsonschema
import pytest

from topopar.cli import main

GOLDEN = Path(__file__).parent / "golden"
PLAN = ["--W", "240", "--Q", "24", "--alpha", "40", "--beta", "1", "--efficiency", "0.5"]

CASES = {
    "project_g6": ["project", "--graph", "g6.edges", "--root", "0", "--depth", "2",
                   "--mode", "full"],
    "density_g6": ["density", "--graph", "g6.edges", "--delta", "1"],
    "plan_c6": ["plan", "--graph", "c6.edges", *PLAN],
    "plan_g6": ["plan", "--graph", "g6.edges", *PLAN],
    "clique_g6": ["clique", "--graph", "g6.edges"],
    "faults_g6": ["faults", "--graph", "g6.edges", "--delta", "1", "--f", "1", "--p", "4"],
    "cycles_g6": ["cycles", "--graph", "g6.edges", "--length", "3"],
}

EVERY_COMMAND = {
    "gen": ["gen", "torus", "3", "3"],
    "project": CASES["project_g6"],
    "metrics": ["metrics", "--graph", "g6.edges"],
    "reach": ["reach", "--graph", "c6.edges", "--delta", "2"],
    "clique": CASES["clique_g6"],
    "density": CASES["density_g6"],
    "components": ["components", "--graph", "g6.edges", "--min-size", "3"],
    "plan": CASES["plan_c6"],
    "embed": ["embed", "--graph", "g6.edges", "--task", "c4.edges"],
    "cycles": ["cycles", "--graph", "c6.edges", "--length", "3", "--delta", "2", "--first"],
    "girth": ["girth", "--graph", "g6.edges"],
    "faults": CASES["faults_g6"],
    "compare": ["compare", "--graph", "g6.edges", "--graph", "c6.edges", *PLAN],
    "audit": ["audit", "--graph", "g6.edges", "--task", "c4.edges", "--delta", "2"],
}


@pytest.fixture(autouse=True)
def in_golden(monkeypatch):
    monkeypatch.chdir(GOLDEN)


def run(argv, capsys):
    code = main(argv)
    cap = capsys.readouterr()
    return code, cap.out, cap.err


@pytest.fixture(scope="module")
def schema():
    text = resources.files("topopar").joinpath("schema/report.schema.json").read_text()
    return json.loads(text)


@pytest.mark.parametrize("name", sorted(CASES))
def test_golden_text(name, capsys):
    code, out, err = run(CASES[name], capsys)
    assert code == 0 and err == ""
    assert out == (GOLDEN / f"{name}.txt").read_text()


def test_documented_examples(capsys):
    assert run(CASES["project_g6"], capsys)[1] == "0(1(2,4,5),3(2,4),4(1,2,3,5))\n"
    out = run(CASES["density_g6"], capsys)[1]
    assert "phi_1\t4\n" in out and "clique\t1 2 4 5\n" in out
    out = run(CASES["plan_c6"], capsys)[1]
    assert "p*\t3\n" in out and "delta\t3\n" in out


def test_golden_json(capsys):
    code, out, _ = run(CASES["density_g6"] + ["--json"], capsys)
    assert code == 0
    assert out == (GOLDEN / "density_g6.json").read_text()


@pytest.mark.parametrize("command", sorted(EVERY_COMMAND))
def test_json_matches_schema(command, schema, capsys):
    code, out, _ = run(EVERY_COMMAND[command] + ["--json"], capsys)
    assert code == 0
    doc = json.loads(out)
    jsonschema.validate(doc, schema)
    assert doc["command"] == command


@pytest.mark.parametrize("command", sorted(EVERY_COMMAND))
def test_text_is_repeatable(command, capsys):
    first = run(EVERY_COMMAND[command], capsys)
    assert first[0] == 0
    assert run(EVERY_COMMAND[command], capsys) == first


def test_byte_identical_across_processes():
    argv = [sys.executable, "-m", "topopar", *EVERY_COMMAND["compare"], "--json"]
    outs = set()
    for seed in ("0", "1", "12345"):
        env = dict(os.environ, PYTHONHASHSEED=seed)
        res = subprocess.run(argv, cwd=GOLDEN, env=env, capture_output=True, check=True)
        outs.add(res.stdout)
    assert len(outs) == 1


def test_out_file(tmp_path, capsys):
    target = tmp_path / "r.txt"
    code, out, _ = run(CASES["project_g6"] + ["--out", str(target)], capsys)
    assert code == 0 and out == ""
    assert target.read_text() == (GOLDEN / "project_g6.txt").read_text()


def test_plan_values_in_json(capsys):
    doc = json.loads(run(CASES["plan_g6"] + ["--json"], capsys)[1])
    r = doc["result"]
    assert (r["p"], r["delta"], r["feasible"]) == (5, 2, True)
    assert r["L"] == pytest.approx(240 / 112)
    assert r["directive"] == "efficiency" and r["target"] == 0.5


def test_faults_json_keys(capsys):
    r = json.loads(run(CASES["faults_g6"] + ["--json"], capsys)[1])["result"]
    assert {"delta", "f", "min_density", "witness", "examined"} <= set(r)
    assert (r["min_density"], r["witness"], r["tolerant"]) == (3, [1], False)


def test_ring_embedding_first(capsys):
    r = json.loads(run(EVERY_COMMAND["cycles"] + ["--json"], capsys)[1])["result"]
    assert r["cycles"] == [[0, 1, 2]]


def test_validation_errors_exit_2(tmp_path, capsys):
    bad = tmp_path / "bad.edges"
    bad.write_text("0 1\n1 x\n")
    code, out, err = run(["density", "--graph", str(bad)], capsys)
    assert code == 2 and out == "" and "line 2" in err
    assert run(["project", "--graph", "g6.edges", "--root", "9"], capsys)[0] == 2
    assert run(["density", "--graph", "missing.edges"], capsys)[0] == 2
    assert run(["metrics", "--graph", str(_disconnected(tmp_path))], capsys)[0] == 2
    # the directive cannot be met, even for p = 2
    code, _, err = run(["plan", "--graph", "g6.edges", "--W", "240", "--speedup", "0.5"],
                       capsys)
    assert code == 2


def _disconnected(tmp_path):
    p = tmp_path / "two.edges"
    p.write_text("0 1\n2 3\n")
    return p


@pytest.mark.parametrize("argv", [
    ["frobnicate"],
    ["density", "--graph", "g6.edges", "--bogus"],
    ["density", "--graph", "g6.edges", "--delta", "0"],
    ["plan", "--graph", "c6.edges", "--W", "240", "--speedup", "2", "--efficiency", "0.5"],
    ["plan", "--graph", "c6.edges", "--W", "240"],
    [],
])
def test_usage_errors_exit_2(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2
    assert "usage" in capsys.readouterr().err


def test_resource_cap_exit_3(tmp_path, capsys):
    k = tmp_path / "k.edges"
    subprocess.run([sys.executable, "-m", "topopar", "gen", "complete", "30", "--out",
                    str(k)], check=True)
    # C(30, 10) fault sets is far above the default cap
    code, out, err = run(["faults", "--graph", str(k), "--f", "10"], capsys)
    assert code == 3 and "cap=1000000" in err and out == ""


def test_audit_mismatch_exit_1(monkeypatch, capsys):
    from topopar import cli
    monkeypatch.setattr(cli, "max_clique", lambda g: type(
        "R", (), {"vertices": (0,)})())
    code, out, _ = run(["audit", "--graph", "g6.edges"], capsys)
    assert code == 1 and "max_clique\tMISMATCH" in out
