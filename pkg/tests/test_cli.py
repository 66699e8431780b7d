import csv
import io
import json
import subprocess
import sys

import pytest

from symchar import __version__
from symchar.cli import BOUND_SCAN_COLUMNS, run


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out=out)
    return code, out.getvalue()


def summary(*argv):
    code, text = call(*argv)
    assert code == 0
    return json.loads(text)["summary"]


def test_character_example():
    s = summary("character", "--lambda", "2,1", "--cycles", "3")
    assert (s["ratio"], s["sigma"]) == ("-1/2", "-3")


def test_sigma_command():
    assert summary("sigma", "--lambda", "2,1", "--cycles", "2")["sigma"] == "0"


def test_cumulant_example():
    s = summary("cumulant", "--lambda", "2,1", "--l", "3")
    assert (s["sf"], s["oracle"], s["match"]) == ("-6", "-6", True)


def test_count_example():
    s = summary("count", "--stirling", "4")
    assert s["counts"] == "1,6,11,6"
    assert s["bound"] == "ok"
    assert s["brute_force_match"] is True


def test_report_envelope():
    code, text = call("sigma", "--lambda", "3,1", "--cycles", "2", "--format", "json")
    report = json.loads(text)
    assert report["version"] == __version__
    assert report["schema_version"] == 1
    assert report["config"] == {"command": "sigma", "cycles": "2", "format": "json", "lambda": "3,1", "workers": 1}


def test_bound_scan_csv_columns():
    code, text = call("bound-scan", "--n-max", "4", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(text)))
    assert tuple(rows[0]) == BOUND_SCAN_COLUMNS
    assert rows[0] == {"n": "2", "lambda": "2", "cycle_type": "2", "lhs": "1", "base": "1", "min_a": "1"}


def test_bound_scan_summary():
    s = summary("bound-scan", "--n-max", "5")
    assert s["holds"] is True
    assert s["max_min_a"] == "2"


def test_mc_validate_is_deterministic():
    argv = ("mc-validate", "--lambda", "2,1", "--cycles", "2", "--samples", "3000", "--seed", "5")
    first, second = call(*argv), call(*argv)
    assert first == second
    s = json.loads(first[1])["summary"]
    assert s["exact"] == "10"
    assert set(s) >= {"exact", "mean", "std_error", "z_score"}


def test_compare_oracles_small():
    s = summary("compare-oracles", "--n-max", "5")
    assert s["all_match"] is True and s["mismatches"] == 0


def test_histogram_text():
    code, text = call("histogram", "--l", "4", "--format", "text")
    assert code == 0
    assert "total: 14" in text


@pytest.mark.parametrize(
    "argv",
    [
        ("sigma", "--lambda", "2,x", "--cycles", "2"),
        ("sigma", "--lambda", "1,2", "--cycles", "2"),
        ("sigma", "--lambda", "2,1", "--cycles", "4"),
        ("mc-validate", "--lambda", "1", "--cycles", "1", "--samples", "10"),
        ("histogram", "--l", "12"),
        ("bogus",),
        ("count",),
    ],
)
def test_bad_input_exits_2(argv, capsys):
    code, text = call(*argv)
    assert code == 2
    assert text == ""


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "symchar", "character", "--lambda", "2,1", "--cycles", "3", "--format", "csv"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[1].endswith("-3,-1/2")


def test_internal_disagreement_exits_3(monkeypatch):
    import symchar.cli as cli

    monkeypatch.setattr(cli, "mn_ratio", lambda lam, ct: 7)
    code, text = call("character", "--lambda", "2,1", "--cycles", "3")
    assert code == 3 and text == ""
