"""End-to-end checks of the collatz command-line tool."""

import json
import os
import subprocess

import pytest

CLI = os.environ.get("COLLATZ_CLI")
if not CLI or not os.path.exists(CLI):
    pytest.skip("COLLATZ_CLI not set; CLI binary unavailable", allow_module_level=True)


def run(*args, expect=0):
    result = subprocess.run([CLI, *args], capture_output=True, text=True)
    assert result.returncode == expect, (args, result.returncode, result.stderr)
    return result.stdout


def test_dr_json_schema():
    out = json.loads(run("dr", "27", "--format", "json"))
    assert out["start"] == "27"
    assert out["final"] == "23"
    assert len(out["word"]) == 59
    assert out["stopping_time"] == "59"


def test_orbit_counts():
    out = json.loads(run("orbit", "2^20-1", "--counts-only", "--format", "json"))
    x = 2**20 - 1
    cnt_i = steps = 0
    while x != 1:
        if x & 1:
            x = (3 * x + 1) >> 1
            cnt_i += 1
        else:
            x >>= 1
        steps += 1
    assert out["cnt_3x1"] == str(cnt_i)
    assert out["cnt_half_total"] == str(steps)


def test_enum_text():
    assert run("enum", "--max-len", "4").splitlines() == ["O", "IO", "IIOO"]


def test_classes_json_lines():
    lines = run("classes", "--max-len", "4", "--format", "json").splitlines()
    entries = [json.loads(line) for line in lines]
    assert entries[2] == {
        "word": "IIOO",
        "residue": "3",
        "modulus_exp": 4,
        "representative": "3",
    }


def test_residue():
    out = json.loads(run("residue", "IIOIO", "--format", "json"))
    assert out == {"word": "IIOIO", "residue": "11", "modulus_exp": 5}


def test_period():
    out = json.loads(run("period", "3", "--k", "2", "--format", "json"))
    assert out["period"] == "16"
    assert out["all_equal"] is True


def test_verify_range_json_and_csv():
    out = json.loads(run("verify-range", "2", "100", "--format", "json"))
    assert out["verified_count"] == 99
    assert out["failures"] == []
    csv = run("verify-range", "2", "100", "--format", "csv")
    assert csv.splitlines()[0] == "length,count"
    assert "1,50" in csv


def test_coverage_cross_check():
    out = json.loads(
        run("coverage", "--level", "4", "--cross-check", "1000", "--format", "json")
    )
    assert out["covered_residues"] == 13
    assert out["uncovered_sample"] == ["7", "11", "15"]
    assert out["cross_check"] is True


def test_exit_codes():
    run("apply", "O", "3", expect=1)        # mismatch: verification failure
    run("dr", "3-5", expect=2)              # negative expression: usage error
    run("dr", "oops", expect=2)             # syntax error
    run("verify-range", "9", "2", expect=2) # lo > hi
    run("verify-range", "2", "50", "--checkpoint", "/nonexistent-dir/x.ckpt",
        expect=3)                            # unwritable checkpoint


def test_apply_trace_text():
    out = run("apply", "IIOO", "3", "--trace")
    assert "trace: 3 5 8 4 2" in out


def test_repeated_invocations_are_identical():
    for args in (("dr", "27", "--format", "json"),
                 ("residue", "IIOO", "--format", "json"),
                 ("period", "7", "--format", "json")):
        assert run(*args) == run(*args)
