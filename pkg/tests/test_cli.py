"""Command-line contract: exit codes, JSON shape, determinism."""
from __future__ import annotations

import json
import subprocess
import sys

import pytest

from ckverify.cli import main

CKVERIFY = [sys.executable, "-m", "ckverify"]


def run_cli(*args):
    return subprocess.run(CKVERIFY + list(args), capture_output=True,
                          text=True, timeout=300)


def main_quiet(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


# ---------------------------------------------------------------------------
# verify

def test_verify_pass_exit_zero(capsys):
    code, out, _ = main_quiet(["verify", "lemma2", "--b", "3"], capsys)
    assert code == 0
    assert "verdict: PASS" in out


@pytest.mark.filterwarnings("ignore:alpha in")
def test_verify_inconclusive_exit_two(capsys):
    code, out, _ = main_quiet(["verify", "theorem1", "--b", "2"], capsys)
    assert code == 2
    assert "verdict: INCONCLUSIVE" in out


def test_verify_bad_modulus_exit_three(capsys):
    code, _, err = main_quiet(["verify", "theorem1", "--b", "1"], capsys)
    assert code == 3
    assert "error" in err


def test_verify_unknown_claim_exit_three():
    r = run_cli("verify", "nosuch")
    assert r.returncode == 3
    assert "invalid choice" in r.stderr


def test_verify_conflicting_modes_exit_three():
    r = run_cli("verify", "lemma1", "--b", "3", "--symbolic")
    assert r.returncode == 3


def test_missing_subcommand_exit_three():
    r = run_cli()
    assert r.returncode == 3


def test_verify_json_shape(capsys):
    code, out, _ = main_quiet(
        ["verify", "corollary1", "--b", "3", "--format", "json"], capsys)
    assert code == 0
    doc = json.loads(out)
    assert list(doc) == ["claim", "mode", "b", "wrapper_len", "verdict",
                         "steps", "curve"]
    assert doc["claim"] == "corollary1"
    assert doc["mode"] == "concrete"
    assert doc["b"] == 3
    assert doc["verdict"] == "PASS"
    assert all(set(s) >= {"name", "verdict"} for s in doc["steps"])
    assert doc["curve"]["lambda"] == "1/5"
    assert doc["curve"]["singular"] is False
    assert "elapsed_ms" not in doc


def test_verify_json_with_certificates(capsys):
    code, out, _ = main_quiet(
        ["verify", "theorem1", "--b", "3", "--format", "json",
         "--certificates"], capsys)
    assert code == 0
    doc = json.loads(out)
    entries = [s["certificate"] for s in doc["steps"]
               if "certificate" in s]
    assert entries
    flat = entries[0]
    assert isinstance(flat, list)
    assert set(flat[0]) == {"left", "relation", "right", "coefficient"}


def test_verify_timing_opt_in(capsys):
    code, out, _ = main_quiet(
        ["verify", "lemma5", "--format", "json", "--timing"], capsys)
    assert code == 0
    doc = json.loads(out)
    assert "elapsed_ms" in doc
    assert isinstance(doc["elapsed_ms"], int)


def test_byte_identical_json_two_runs():
    """Two symbolic certificate runs must match byte for byte."""
    args = ("verify", "theorem1", "--symbolic", "--certificates",
            "--format", "json")
    a = run_cli(*args)
    b = run_cli(*args)
    assert a.returncode == 0 and b.returncode == 0
    assert a.stdout == b.stdout
    assert a.stdout.strip()


# ---------------------------------------------------------------------------
# sweep

def test_sweep_single_row(capsys):
    code, out, _ = main_quiet(
        ["sweep", "--from", "5", "--to", "5", "--format", "json"], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["verdict"] == "PASS"
    (row,) = doc["rows"]
    assert row["b"] == 5
    assert row["lambda"] == "3/7"
    assert row["delta_nonzero"] is True
    assert row["singular"] is False


@pytest.mark.filterwarnings("ignore:alpha in")
def test_sweep_includes_singular_b2(capsys):
    code, out, _ = main_quiet(
        ["sweep", "--from", "2", "--to", "3", "--format", "json"], capsys)
    assert code == 2
    doc = json.loads(out)
    assert doc["verdict"] == "INCONCLUSIVE"
    first, second = doc["rows"]
    assert first["singular"] is True and first["j"] is None
    assert second["singular"] is False


def test_sweep_bad_range_exit_three(capsys):
    code, _, err = main_quiet(["sweep", "--from", "3", "--to", "2"], capsys)
    assert code == 3
    assert "error" in err
    code, _, _ = main_quiet(["sweep", "--from", "1", "--to", "3"], capsys)
    assert code == 3


def test_sweep_text_table(capsys):
    code, out, _ = main_quiet(["sweep", "--from", "6", "--to", "6"], capsys)
    assert code == 0
    assert "1728" in out
    assert "overall: PASS" in out


# ---------------------------------------------------------------------------
# check-file

STABLE_TEXT = """\
GENERATORS: x1 x2 x3 x4
INVOLUTION: x1 -> x2; x2 -> x1; x3 -> x4; x4 -> x3
RELATIONS:
  x1*x1 + x4*x4
  x2*x2 + x3*x3
"""

UNSTABLE_TEXT = """\
GENERATORS: x1 x2 x3 x4
INVOLUTION: x1 -> x2; x2 -> x1; x3 -> x4; x4 -> x3
RELATIONS:
  x1*x3
"""


def test_check_file_stable(tmp_path, capsys):
    f = tmp_path / "p.pres"
    f.write_text(STABLE_TEXT)
    code, out, _ = main_quiet(
        ["check-file", str(f), "--involution-stability"], capsys)
    assert code == 0
    assert "verdict: STABLE" in out
    assert "r1" in out and "r2" in out


def test_check_file_unstable(tmp_path, capsys):
    f = tmp_path / "p.pres"
    f.write_text(UNSTABLE_TEXT)
    code, out, _ = main_quiet(
        ["check-file", str(f), "--involution-stability"], capsys)
    assert code == 1
    assert "verdict: UNSTABLE" in out
    assert "NON_MEMBER" in out


def test_check_file_parse_error(tmp_path, capsys):
    f = tmp_path / "p.pres"
    f.write_text("GENERATORS: x1 x2\nRELATIONS:\n  x1*+x2\n")
    code, _, err = main_quiet(
        ["check-file", str(f), "--involution-stability"], capsys)
    assert code == 3
    assert "error" in err


def test_check_file_missing_file(capsys):
    code, _, err = main_quiet(
        ["check-file", "/nonexistent/q.pres", "--involution-stability"],
        capsys)
    assert code == 3
    assert "cannot read" in err


def test_check_file_flag_required():
    r = run_cli("check-file", "whatever.pres")
    assert r.returncode == 3
