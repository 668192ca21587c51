"""Command-line interface: subcommands, exit codes, report files."""
import csv
import json

import pytest

from equifacet.cli import main


def run(argv):
    """Invoke the CLI, normalizing argparse's SystemExit to a code."""
    try:
        return main(argv)
    except SystemExit as exc:
        return int(exc.code)


# verify -------------------------------------------------------------------

def test_verify_k7_exits_zero(capsys):
    assert run(["verify", "--k", "7"]) == 0
    out = capsys.readouterr().out
    assert "7.560546456" in out
    assert "K7-C5" in out
    assert "VERIFIED" in out


def test_verify_k8_exits_zero(capsys):
    assert run(["verify", "--k", "8"]) == 0
    out = capsys.readouterr().out
    assert "8.000000000" in out
    assert "K8-C10" in out


def test_verify_k9_usage_error(capsys):
    assert run(["verify", "--k", "9"]) == 2


def test_verify_report_file(tmp_path, capsys):
    out = tmp_path / "report.json"
    assert run(["verify", "--k", "7", "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert doc["command"] == "verify"
    assert doc["results"]["winner"] == "K7-C5"
    assert doc["results"]["matches"] is True
    assert "wall_time" not in doc
    assert len(doc["best"]["points"]) == 7


# prune --------------------------------------------------------------------

def test_prune_k7_builtin(capsys):
    assert run(["prune", "--catalog", "k7.catalog"]) == 0
    out = capsys.readouterr().out
    assert "K7-C5" in out
    # only the pentagonal bipyramid class keeps candidates
    assert out.count("isosceles-candidates") == 1
    assert out.count("MonochromeFacetOnly") == 4


def test_prune_class_filter(capsys):
    assert run(["prune", "--catalog", "k8.catalog", "--class", "K8-C14"]) == 0
    out = capsys.readouterr().out
    assert "4 survivors in 3 orbits" in out


def test_prune_missing_catalog(capsys):
    assert run(["prune", "--catalog", "missing.file"]) == 2
    assert "missing.file" in capsys.readouterr().err


def test_prune_malformed_catalog(tmp_path, capsys):
    bad = tmp_path / "bad.catalog"
    bad.write_text("{ not json")
    assert run(["prune", "--catalog", str(bad)]) == 2


def test_prune_report(tmp_path, capsys):
    out = tmp_path / "prune.json"
    assert run(["prune", "--catalog", "k8.catalog", "--class", "K8-C13",
                "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    entry = doc["results"]["classes"][0]
    assert entry["class"] == "K8-C13"
    assert entry["survivors"] == 3
    assert entry["survivor_orbits"] == 2


# optimize -----------------------------------------------------------------

def test_optimize_k3_usage_error(capsys):
    assert run(["optimize", "--k", "3"]) == 2


def test_optimize_small_budget(tmp_path, capsys):
    out = tmp_path / "opt.json"
    csv_path = tmp_path / "bounds.csv"
    assert run(["optimize", "--k", "6", "--restarts", "4", "--iters", "500",
                "--seed", "1", "--out", str(out),
                "--emit-bounds-csv", str(csv_path)]) == 0
    doc = json.loads(out.read_text())
    assert doc["results"]["k"] == 6
    assert doc["results"]["area"] > 6.5
    assert len(doc["best"]["points"]) == 6
    with open(csv_path, newline="") as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == ["K", "value", "lower_aK", "upper_bK"]
    ks = [int(r[0]) for r in rows[1:]]
    assert ks == [4, 5, 6, 7, 8, 12]
    for r in rows[1:]:
        assert float(r[2]) <= float(r[1]) <= float(r[3])


def test_optimize_report_reproducible(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    args = ["optimize", "--k", "5", "--restarts", "2", "--iters", "300",
            "--seed", "9"]
    assert run(args + ["--out", str(a)]) == 0
    assert run(args + ["--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


# table --------------------------------------------------------------------

def test_table_quick(capsys):
    assert run(["table", "--restarts", "2", "--iters", "300"]) == 0
    out = capsys.readouterr().out
    assert "6.928203230" in out      # K=6 closed form
    assert "7.560546456" in out      # K=7 closed form
    assert "9.574541383" in out      # K=12 closed form
    assert "8.11978" in out          # unconstrained 8-point record
