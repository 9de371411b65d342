import csv
import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from degfg.cli import main

GOLDEN = Path(__file__).parent / "golden"

EXAMPLES = [
    ("table_poly_fg.json", ["table", "--family", "poly-fg", "--k", "1", "--u", "-1", "--lambda", "1/3",
                            "--x", "0", "--n-max", "4"]),
    ("table_deg_falling.json", ["table", "--family", "deg-falling", "--x", "3", "--lambda", "1", "--n-max", "2"]),
    ("audit_seed42.json", ["audit", "--seed", "42", "--n-max", "10", "--samples", "3"]),
]


def run(*args: str) -> subprocess.CompletedProcess:
    return subprocess.run([sys.executable, "-m", "degfg", *args], capture_output=True, text=True)


@pytest.mark.parametrize("golden, argv", EXAMPLES, ids=[e[0] for e in EXAMPLES])
def test_golden(golden, argv, capsys):
    assert main(argv) == 0
    assert capsys.readouterr().out == (GOLDEN / golden).read_text()


def test_table_values(capsys):
    main(EXAMPLES[1][1])
    rows = json.loads(capsys.readouterr().out)
    assert [r["value"] for r in rows] == ["1", "3", "6"]


def test_csv_matches_json(capsys):
    argv = ["table", "--family", "poly-fg-cos", "--k", "2", "--u", "-2/3", "--lambda", "1/4",
            "--x", "1/2", "--y", "3/2", "--n-max", "6"]
    main(argv)
    rows = json.loads(capsys.readouterr().out)
    main(argv + ["--format", "csv"])
    text = capsys.readouterr().out
    assert text.splitlines()[0] == "family,n,k,lambda,u,x,y,value"
    parsed = list(csv.DictReader(io.StringIO(text)))
    assert parsed == [{key: str(r[key]) for key in parsed[0]} for r in rows]


def test_out_file(tmp_path, capsys):
    out = tmp_path / "t.json"
    assert main(EXAMPLES[1][1] + ["--out", str(out)]) == 0
    assert capsys.readouterr().out == ""
    assert out.read_text() == (GOLDEN / "table_deg_falling.json").read_text()


def test_series_dump(capsys):
    main(["series", "--family", "deg-log-series", "--lambda", "1/2", "--order", "3"])
    assert json.loads(capsys.readouterr().out) == ["0", "1", "-1/4", "1/8"]


def test_complex_values_are_gaussian_text(capsys):
    main(["table", "--family", "poly-fg-complex", "--y", "1", "--n-max", "2"])
    values = [r["value"] for r in json.loads(capsys.readouterr().out)]
    assert values[0] == "0+0*i" and values[1].endswith("*i")


def test_limits_exit_zero(capsys):
    assert main(["limits", "--family", "genocchi-deg", "--family", "stirling1-deg", "--n-max", "6"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert [r["family"] for r in doc["results"]] == ["genocchi-deg", "stirling1-deg"]
    assert all(r["verdict"] == "holds-exactly" for r in doc["results"])


def test_audit_text_and_csv(capsys):
    assert main(["audit", "--n-max", "4", "--samples", "1", "--format", "text"]) == 0
    assert "hard failures: 0" in capsys.readouterr().out
    assert main(["audit", "--n-max", "4", "--samples", "1", "--format", "csv"]) == 0
    assert capsys.readouterr().out.startswith("case,variant,reading,kind,verdict,n,lhs,rhs\n")


@pytest.mark.parametrize("argv, flag", [
    (["table", "--family", "poly-fg", "--lambda", "0"], "--lambda"),
    (["table", "--family", "poly-fg", "--u", "1"], "--u"),
    (["table", "--family", "poly-fg", "--x", "1.5"], "--x"),
    (["table", "--family", "nope"], "--family"),
    (["series", "--family", "stirling1-deg", "--k", "-1"], "--k"),
    (["audit", "--samples", "0"], "--samples"),
    (["limits", "--n-max", "-3"], "--n-max"),
])
def test_usage_errors(argv, flag):
    cp = run(*argv)
    assert cp.returncode == 2
    assert flag in cp.stderr
    assert "Traceback" not in cp.stderr


def test_module_entry_point():
    cp = run("table", "--family", "deg-falling", "--x", "3", "--lambda", "1", "--n-max", "2")
    assert cp.returncode == 0
    assert cp.stdout == (GOLDEN / "table_deg_falling.json").read_text()
