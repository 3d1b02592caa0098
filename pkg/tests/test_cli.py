import json
import subprocess
import sys

import pytest

from upwords.cli import main


def cli(capsys, *args):
    code = main(list(args))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify(capsys):
    code, out, _ = cli(capsys, "verify", "0*011100", "--n", "3")
    assert code == 0 and "yes" in out
    code, out, _ = cli(capsys, "verify", "**01110", "--n", "3")
    assert code == 1 and "duplicated 110" in out
    code, out, _ = cli(capsys, "verify", "*001*110", "--n", "4", "--cyclic")
    assert code == 0
    code, _, err = cli(capsys, "verify", "021", "--n", "2")
    assert code == 2 and "error" in err


def test_verify_json(capsys):
    code, out, _ = cli(capsys, "verify", "**01110", "--n", "3", "--json")
    data = json.loads(out)
    assert code == 1
    assert data["universal"] is False and data["n"] == 3 and data["alphabet"] == 2
    assert {"kind": "duplicated", "factor": "110", "windows": [1, 5]} in data["violations"]


def test_construct(capsys):
    code, out, _ = cli(capsys, "construct", "--family", "nm1", "--n", "4")
    assert code == 0 and out.splitlines()[0] == "***01111"
    code, out, _ = cli(capsys, "construct", "--family", "posk", "--n", "3", "--k", "2")
    assert code == 0 and out.splitlines()[0] == "0*011100"
    code, _, _ = cli(capsys, "construct", "--family", "posk", "--n", "3", "--k", "5")
    assert code == 2
    code, out, _ = cli(capsys, "construct", "--family", "two", "--n", "5", "--json", "--unicode")
    assert code == 0 and json.loads(out)["word"].startswith("◊0000111◊")


def test_feasible(capsys):
    code, out, _ = cli(capsys, "feasible", "--alphabet", "3", "--n", "2", "--single-diamond", "--k", "1")
    assert code == 0 and "nonexistent by T3.1" in out
    code, out, _ = cli(capsys, "feasible", "--alphabet", "2", "--n", "12", "--cyclic")
    assert "d in {3, 6, 9}" in out
    code, out, _ = cli(capsys, "feasible", "--n", "4", "--two-diamonds", "--shape", "3,0,3", "--json")
    data = json.loads(out)
    assert (data["verdict"], data["theorem"]) == ("nonexistent", "C4.2")
    code, out, _ = cli(capsys, "feasible", "--n", "4", "--prefix-run", "--d", "3")
    assert "nm1_diamonds" in out
    code, _, _ = cli(capsys, "feasible", "--n", "4")
    assert code == 2


def test_search(capsys):
    code, out, _ = cli(capsys, "search", "--n", "3", "--diamond-at", "4", "--length", "7")
    assert code == 0 and "0 witness(es), exhausted" in out
    code, out, _ = cli(capsys, "search", "--n", "4", "--diamond-at", "6", "--length", "15", "--first", "--json")
    lines = [json.loads(x) for x in out.splitlines()]
    assert code == 0 and len(lines[-1]["witnesses"]) == 1 and lines[0]["universal"]
    code, out, _ = cli(capsys, "search", "--n", "4", "--cyclic", "--diamonds", "1,5", "--length", "8")
    assert code == 0 and "*001*110" in out
    code, _, err = cli(capsys, "search", "--n", "3", "--diamond-at", "2", "--length", "9")
    assert code == 2 and "expected 8, got 9" in err
    code, out, _ = cli(capsys, "search", "--n", "5", "--diamond-at", "7", "--node-budget", "50")
    assert code == 1 and "budget-truncated" in out


def test_tables(capsys):
    code, out, _ = cli(capsys, "tables", "3")
    assert code == 0 and "18/18 entries pass" in out
    code, out, _ = cli(capsys, "tables", "1", "--json")
    rows = [json.loads(x) for x in out.splitlines()]
    assert code == 0 and all(r["passed"] for r in rows)


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["construct", "--n", "3"])
    assert exc.value.code == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "upwords", "verify", "*", "--n", "1", "--cyclic"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and "yes" in proc.stdout
