import json
import subprocess
import sys
from pathlib import Path

import jsonschema
import pytest

from cnfstruct.cli import main
from cnfstruct.cnf import parse_dimacs
from cnfstruct.mu import is_smu
from cnfstruct.report import analyze, dumps, report_schema

GOLDEN = Path(__file__).parent / "data" / "golden"
CNF_FILES = sorted(GOLDEN.glob("*.cnf"))


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def unit_pair(tmp_path):
    path = tmp_path / "pair.cnf"
    path.write_text("p cnf 1 2\n1 0\n-1 0\n")
    return path


def test_analyze_unit_pair(capsys, unit_pair):
    code, out, _ = run(capsys, "analyze", unit_pair)
    assert code == 0
    report = json.loads(out)
    assert (report["n"], report["c"], report["deficiency"]) == (1, 2, 1)
    assert report["surplus"]["value"] == 1
    assert report["degrees"]["minvdeg"] == 2
    assert report["mu"] is True and report["smu"] is True
    assert report["input"] == "pair.cnf"


def test_nm(capsys):
    assert run(capsys, "nm", 26)[1] == "30\n"
    assert run(capsys, "nm", 13, "--variant", "nm1")[1] == "16\n"
    code, out, _ = run(capsys, "nm", "--table", 11)
    table = json.loads(out)
    assert table["values"][-1] == 14 and table["jumps"] == [1, 4, 11]
    code, out, _ = run(capsys, "--format", "text", "nm", "--table", 3)
    assert out == "1 2\n2 4\n3 5\n"


def test_certify_high_degree(capsys):
    code, out, _ = run(capsys, "certify", GOLDEN / "high_degree_k3.cnf")
    verdict = json.loads(out)
    assert code == 0
    assert verdict["kind"] == "autarky" and verdict["autarky"] == {"3": 1, "4": 1}


def test_surplus_and_kernel(capsys, tmp_path):
    code, out, _ = run(capsys, "surplus", GOLDEN / "full_2.cnf")
    assert json.loads(out)["surplus"] == 2
    code, out, _ = run(capsys, "kernel", GOLDEN / "pair_plus_unit.cnf")
    assert out == "p cnf 1 2\n1 0\n-1 0\n"
    code, out, _ = run(capsys, "kernel", "--lean", GOLDEN / "m_3.cnf")
    assert out == "p cnf 0 0\n"


def test_saturate(capsys):
    code, out, _ = run(capsys, "saturate", GOLDEN / "chain.cnf")
    assert code == 0 and is_smu(parse_dimacs(out))
    code, _, err = run(capsys, "saturate", GOLDEN / "m_3.cnf")
    assert code == 1


def test_check_mu(capsys):
    code, out, _ = run(capsys, "check-mu", GOLDEN / "full_3.cnf")
    result = json.loads(out)
    assert code == 0 and result["holds"] and result["strong_witness"]
    code, out, _ = run(capsys, "check-mu", "--strict", GOLDEN / "m_derived_4.cnf")
    assert code == 0 and json.loads(out)["variant"] == "nm1"
    code, out, _ = run(capsys, "check-mu", GOLDEN / "m_3.cnf")
    assert code == 1 and json.loads(out)["mu"] is False


def test_construct(capsys):
    assert run(capsys, "construct", "M", "--vars", 2)[1] == "p cnf 2 3\n1 2 0\n1 -2 0\n-1 2 0\n"
    assert parse_dimacs(run(capsys, "construct", "A", "--vars", 3)[1]).c == 8
    code, out, _ = run(capsys, "construct", "mlean", "--k", 3, "--K", 2, "--base", GOLDEN / "full_2.cnf")
    assert parse_dimacs(out) == parse_dimacs((GOLDEN / "high_degree_k3.cnf").read_text())
    code, _, _ = run(capsys, "construct", "mlean", "--k", 3, "--K", 2, "--base", GOLDEN / "m_3.cnf")
    assert code == 2


def test_enumerate(capsys):
    code, out, err = run(capsys, "enumerate", "--vars", 2, "--filter", "mu", "--canonical")
    rows = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and len(rows) == 5
    assert all(parse_dimacs(r["dimacs"]).c == r["c"] for r in rows)
    code, out, _ = run(capsys, "enumerate", "--vars", 1, "--filter", "hitting", "--reports")
    for line in out.splitlines():
        jsonschema.validate({k: v for k, v in json.loads(line).items() if k != "dimacs"}, report_schema())
    code, out, _ = run(capsys, "--format", "text", "enumerate", "--vars", 1, "--filter", "lean")
    assert "c enum-1" in out


def test_exit_codes(capsys, tmp_path):
    bad = tmp_path / "bad.cnf"
    bad.write_text("p cnf 1 1\n1 -1 0\n")
    assert run(capsys, "analyze", bad)[0] == 2
    assert run(capsys, "analyze", tmp_path / "missing.cnf")[0] == 2
    assert run(capsys, "nm", 0)[0] == 2
    assert run(capsys, "nm")[0] == 2
    with pytest.raises(SystemExit) as info:
        main(["no-such-command"])
    assert info.value.code == 2
    assert run(capsys, "--solver-guard", 1, "saturate", GOLDEN / "full_2.cnf")[0] == 3
    assert run(capsys, "--brute-guard", 1, "kernel", "--lean", GOLDEN / "full_2.cnf")[0] == 3
    assert run(capsys, "surplus", tmp_path / "missing.cnf")[0] == 2
    empty = tmp_path / "empty.cnf"
    empty.write_text("p cnf 0 1\n0\n")
    assert run(capsys, "certify", empty)[0] == 1


def test_guards_skip_parts_of_analyze(capsys):
    code, out, _ = run(capsys, "--solver-guard", 1, "--brute-guard", 1, "analyze", GOLDEN / "full_3.cnf")
    report = json.loads(out)
    assert code == 0
    assert report["mu"] is None and report["kernels"]["lean"] is None
    assert {"mu", "lean_kernel", "satisfiable"} <= set(report["skipped"])
    jsonschema.validate(report, report_schema())


def test_env_overrides_guards(monkeypatch, capsys):
    monkeypatch.setenv("CNFSTRUCT_SOLVER_GUARD", "1")
    assert run(capsys, "saturate", GOLDEN / "full_2.cnf")[0] == 3


def test_text_format(capsys):
    code, out, _ = run(capsys, "--format", "text", "analyze", GOLDEN / "unit_pair.cnf")
    assert "surplus:" in out and "  value: 1" in out


@pytest.mark.parametrize("path", CNF_FILES, ids=lambda p: p.stem)
def test_reports_validate_and_are_deterministic(path):
    F = parse_dimacs(path.read_bytes())
    first = analyze(F, path.name)
    jsonschema.validate(first, report_schema())
    assert dumps(first) == dumps(analyze(parse_dimacs(path.read_bytes()), path.name))
    timed = analyze(F, path.name, timings=True)
    jsonschema.validate(timed, report_schema())
    assert set(timed["timings"]) >= {"surplus", "matching_lean_kernel"}


def test_parallel_batch_keeps_order(capsys):
    code, out, _ = run(capsys, "analyze", "--jobs", 3, *CNF_FILES)
    names = [json.loads(line)["input"] for line in out.splitlines()]
    assert code == 0 and names == [p.name for p in CNF_FILES]


def test_module_entry_point_reads_stdin():
    proc = subprocess.run(
        [sys.executable, "-m", "cnfstruct", "analyze", "-"],
        input=b"p cnf 1 2\n1 0\n-1 0\n", capture_output=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["input"] == "<stdin>"
