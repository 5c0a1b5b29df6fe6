import json
import os
import subprocess
import sys

import pytest

from iterid.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--json")
    return code, json.loads(out)


def test_orbit_prop_6_1(capsys):
    code, out, _ = run(capsys, "orbit", "--group", "wreath(int,int)", "--word", "[x1,[x1,x2]]",
                       "--tuple", "(s:1;)", "(s:1; 0:1)")
    assert code == 0 and "ReachesIdentity(depth=2)" in out


def test_solvable_alt5(capsys):
    code, doc = run_json(capsys, "solvable", "--group", "alt(5)", "--word-name", "w_BWW")
    assert code == 1
    assert doc["result"]["solvable"] is False
    assert doc["result"]["verdict"]["witness"]["orbit"]["outcome"] == "EntersCycle"


def test_iterate(capsys):
    code, out, _ = run(capsys, "iterate", "--word", "x1^2", "--n", "3")
    assert code == 0 and out.strip() == "x1^8"
    code, doc = run_json(capsys, "iterate", "--word", "[x1,x2]", "--n", "2", "--scheme", "s")
    assert doc["result"]["arity"] == 4


def test_json_envelope(capsys):
    code, doc = run_json(capsys, "parse", "--word", "[x1,x2]", "--seed", "3")
    assert set(doc) == {"schema_version", "command", "inputs", "result", "seed", "duration_ms"}
    assert doc["schema_version"] == 1 and doc["seed"] == 3 and doc["duration_ms"] is None
    assert doc["result"]["syllables"] == [[1, -1], [2, -1], [1, 1], [2, 1]]


def test_seed_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("ITERID_SEED", "17")
    _, doc = run_json(capsys, "parse", "--word", "x1")
    assert doc["seed"] == 17


@pytest.mark.parametrize("argv, code", [
    (["check-e", "--group", "sym(4)", "--word-name", "w_BWW"], 0),
    (["check-e", "--group", "alt(5)", "--word-name", "w_BWW"], 1),
    (["check-e", "--group", "infunitri", "--word", "[x1,[x2,x3]]", "--size-bound", "3",
      "--sample-count", "20"], 2),
    (["check-e", "--group", "zd(2)", "--word", "x1^2 x2", "--sample-count", "5"], 1),
    (["check-s", "--group", "sym(4)", "--word", "[x1,x2]"], 0),
    (["check-s", "--group", "zd(1)", "--word", "x1 x2", "--tuple", "1", "0",
      "--depth-max", "5"], 1),
    (["depth", "--group", "cyclic(8)", "--word", "x1^2"], 0),
    (["depth", "--group", "sym(3)", "--word", "[x1,x2]"], 1),
    (["decompose", "--word", "x2 x1^2 x2^-1 x1"], 0),
    (["eval", "--group", "sym(6)", "--word", "x1^30", "--tuple", "(1 2 3 4)(5 6)"], 0),
    (["orbit", "--group", "int", "--word", "x1 x2", "--tuple", "1", "1", "--budget", "5"], 2),
    (["orbit", "--group", "alt(5)", "--word-name", "w_BWW", "--tuple", "(1 2 3)",
      "(3 4 5)"], 1),
    (["reproduce", "rm-6-return-times"], 0),
    (["list"], 0),
])
def test_exit_codes(capsys, argv, code):
    assert run(capsys, *argv)[0] == code


@pytest.mark.parametrize("argv", [
    ["parse", "--word", "[x1,"],
    ["eval", "--group", "sym(3)", "--word", "[x1,x2]", "--tuple", "(1 2)"],
    ["eval", "--group", "sym(3)", "--word", "x1", "--tuple", "(1 9)"],
    ["eval", "--group", "nope(3)", "--word", "x1", "--tuple", "1"],
    ["check-e", "--group", "int", "--word", "x1", "--mode", "exhaustive"],
    ["check-s", "--group", "int", "--word", "x1"],
    ["iterate", "--word", "x1", "--n", "0"],
    ["iterate", "--word", "[x1,x2]", "--n", "20", "--scheme", "s"],
    ["reproduce", "nope"],
    ["reproduce", "prop-6.1-zwrz", "--param", "bogus=1"],
    ["bogus"],
    ["orbit", "--group", "int"],
    ["check-e", "--group", "sym(3)", "--word", "x1", "--budget", "-3"],
])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 64
    assert "error" in err


def test_parse_error_has_position(capsys):
    _, _, err = run(capsys, "parse", "--word", "x1 )")
    assert "position 3" in err


def test_arity_mismatch_names_both(capsys):
    _, _, err = run(capsys, "eval", "--group", "sym(3)", "--word", "[x1,x2,x3]",
                    "--tuple", "(1 2)")
    assert "arity 3" in err and "1 tuple" in err


@pytest.mark.parametrize("command", ["parse", "eval", "iterate", "orbit", "check-e", "check-s",
                                     "depth", "decompose", "solvable", "reproduce", "list"])
def test_help_documents_grammars(capsys, command):
    code, out, _ = run(capsys, command, "--help")
    assert code == 0
    assert "word grammar" in out and "element literals" in out and "wreath" in out


def test_workers_do_not_change_output(capsys):
    argv = ["check-e", "--group", "sym(4)", "--word", "[x1^2,x2]", "--json"]
    a = run(capsys, *argv, "--workers", "1")[1]
    b = run(capsys, *argv, "--workers", "4")[1]
    assert a == b


def _subprocess(argv, hashseed):
    env = dict(os.environ, PYTHONHASHSEED=str(hashseed))
    env.pop("ITERID_SEED", None)
    return subprocess.run([sys.executable, "-m", "iterid", *argv], capture_output=True,
                          text=True, env=env, check=False)


@pytest.mark.parametrize("argv", [
    ["check-e", "--group", "wreath(cyclic(3),int)", "--word", "[x1^3,x2]", "--seed", "4"],
    ["check-s", "--group", "sym(4)", "--word", "[x1,x2]"],
    ["reproduce", "grig-torsion"],
])
def test_byte_identical_across_processes(argv):
    a = _subprocess([*argv, "--json"], 1)
    b = _subprocess([*argv, "--json", "--workers", "4"], 2)
    assert a.returncode == b.returncode
    assert a.stdout == b.stdout and a.stdout
