import json
import subprocess
import sys

import pytest

from g2quat.cli import main
from g2quat.counts import load_fixture


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_count_csv_matches_fixture(capsys):
    code, out, _ = run(capsys, "--jobs", "1", "count", "--from", "3", "--to", "52", "--format", "csv")
    assert code == 0
    rows = out.splitlines()[1:]
    assert len(rows) == 50
    fixture = load_fixture()
    assert {int(r.split(",")[0]): int(r.split(",")[3]) for r in rows} == fixture


def test_count_is_deterministic(capsys):
    a = run(capsys, "--jobs", "2", "count", "--from", "3", "--to", "30", "--format", "json")[1]
    b = run(capsys, "--jobs", "1", "count", "--from", "3", "--to", "30", "--format", "json")[1]
    assert a == b
    assert json.loads(a)[0]["k"] == 3


def test_count_rejects_k2(capsys):
    code, out, err = run(capsys, "count", "--from", "2", "--to", "2")
    assert code == 2 and out == ""
    assert "k > 2" in err


def test_usage_errors(capsys):
    assert run(capsys)[0] == 2
    assert run(capsys, "count", "--from", "3")[0] == 2
    assert run(capsys, "count", "--from", "3", "--to", "4", "--format", "xml")[0] == 2
    assert run(capsys, "dims", "--weight", "1", "0")[0] == 2
    assert run(capsys, "dims", "--weight", "-1", "1")[0] == 2


def test_small_subcommands(capsys):
    assert run(capsys, "invariant", "--weight", "3", "1")[1] == "0\n"
    assert run(capsys, "invariant", "--weight", "12", "4")[1] == "1\n"
    assert run(capsys, "dims", "--weight", "3", "1")[1] == "14\n"
    assert run(capsys, "modforms", "--k", "24")[1] == "2\n"


def test_verify(capsys, tmp_path):
    assert run(capsys, "--jobs", "1", "verify")[:2] == (0, "PASS\n")
    bad = {str(k): v for k, v in load_fixture().items()}
    bad["7"] = 3
    p = tmp_path / "bad.json"
    p.write_text(json.dumps(bad))
    code, out, err = run(capsys, "--jobs", "1", "verify", "--fixture", str(p))
    assert (code, out) == (1, "FAIL\n")
    assert "k=7" in err
    assert run(capsys, "verify", "--fixture", str(tmp_path / "missing.json"))[0] == 2


def test_consistency_error_exit_code(capsys, tmp_path):
    # a datafile whose class sizes are off makes invariant dimensions non-integral
    from g2quat.gammaclasses import default_datafile

    data = json.loads(default_datafile().read_text())
    data[1]["size"] += 1
    p = tmp_path / "classes.json"
    p.write_text(json.dumps(data))
    code, _, err = run(capsys, "--data", str(p), "invariant", "--weight", "1", "1")
    assert code == 3
    assert "consistency" in err


def test_selftest(capsys):
    code, out, _ = run(capsys, "selftest")
    assert code == 0
    assert out.count("PASS") == len(out.splitlines())


def test_classes_emit(capsys, tmp_path):
    from g2quat.gammaclasses import default_datafile

    p = tmp_path / "c.json"
    assert run(capsys, "classes", "--emit", str(p))[0] == 0
    assert p.read_text() == default_datafile().read_text()


def test_console_script_entry():
    r = subprocess.run([sys.executable, "-m", "g2quat.cli", "modforms", "--k", "12"], capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout == "1\n"
