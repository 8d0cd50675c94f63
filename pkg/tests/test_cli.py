from __future__ import annotations

import json
import subprocess
import sys

import pytest

from tlfrobenius import cli


def run(*argv, env=None):
    return subprocess.run([sys.executable, "-m", "tlfrobenius", *argv], capture_output=True, text=True, env=env)


def test_level_zero_is_usage_error():
    r = run("verify", "--level", "0")
    assert r.returncode == 2
    assert "level must be at least 1" in r.stderr


def test_level_not_integer():
    with pytest.raises(SystemExit) as err:
        cli.main(["jw", "--level", "two", "-i", "1"])
    assert err.value.code == 2


def test_jw_level2_index2(capsys):
    assert cli.main(["jw", "--level", "2", "--index", "2"]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[0] == "f_2 at level 2: 2 terms"


@pytest.mark.parametrize("i, nterms", [(0, 1), (1, 1), (2, 2), (3, 5)])
def test_jw_term_counts(i, nterms):
    # f_i has a nonzero coefficient on every diagram in TL_i
    assert len(cli.jw_terms(2, i)) == nterms


def test_jw_index_out_of_range(capsys):
    with pytest.raises(SystemExit) as err:
        cli.main(["jw", "--level", "2", "-i", "4"])
    assert err.value.code == 2


def test_jw_json_round_trip(capsys):
    cli.main(["jw", "--level", "3", "-i", "2", "--format", "json"])
    out = capsys.readouterr().out
    data = json.loads(out)
    assert data["schema"] == cli.SCHEMA and data["index"] == 2
    assert cli.dump_json(data) == out


def test_verify_json_is_deterministic_and_round_trips():
    a = run("verify", "--level", "1", "--format", "json")
    b = run("verify", "--level", "1", "--format", "json", "--jobs", "2")
    assert a.returncode == 0, a.stderr
    assert a.stdout == b.stdout
    data = json.loads(a.stdout)
    assert cli.dump_json(data) == a.stdout
    assert data["ok"] and all(c["status"] == "pass" for c in data["checks"])
    assert [c["id"] for c in data["checks"]] == [item[0] for item in cli._plan(1, "core", 0, None)]


def test_verify_exit_code_reflects_failures(tmp_path):
    env = {"TLFROB_REPORT_DIR": str(tmp_path), "PATH": "/usr/bin:/bin"}
    r = run("verify", "--level", "1", "--suite", "frobenius", env=env)
    # the squared Nakayama morphism is a sign on odd grades, so these checks fail
    assert r.returncode == 1
    report = json.loads((tmp_path / "verify-k1-frobenius.json").read_text())
    failed = {c["id"] for c in report["checks"] if c["status"] == "fail"}
    assert failed == {"sigma.nakayama_square", "sigma.nakayama_order", "sigma.brute_force_square"}
    assert "[FAIL]" in r.stdout


def test_preproj_a2_text():
    r = run("preproj", "--level", "1", "--graph", "A2")
    assert r.returncode == 0, r.stderr
    assert "total dimension 4" in r.stdout
    assert "Nakayama order: 2" in r.stdout


def test_preproj_json(capsys):
    assert cli.main(["preproj", "--level", "2", "--graph", "A3", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    res = data["result"]
    assert res["total_dim"] == 10 and res["order"] == 2
    assert res["dimension_matrices"][0] == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]


def test_preproj_e6_level1_error(capsys):
    assert cli.main(["preproj", "--level", "1", "--graph", "E6"]) == 2
    assert "Coxeter number 12" in capsys.readouterr().err


def test_preproj_from_file(tmp_path, capsys):
    f = tmp_path / "a3.txt"
    f.write_text("x y\ny z\n")
    assert cli.main(["preproj", "--level", "2", "--graph", str(f)]) == 0
    out = capsys.readouterr().out
    assert "x->z" in out and "z->x" in out


def test_preproj_rejects_non_dynkin_file(tmp_path, capsys):
    f = tmp_path / "tri.txt"
    f.write_text("a b\nb c\nc a\n")
    assert cli.main(["preproj", "--level", "1", "--graph", str(f)]) == 2


def test_max_level_guard(capsys):
    with pytest.raises(SystemExit):
        cli.main(["verify", "--level", "20"])
    cli.main(["jw", "--level", "1", "-i", "0"])  # jw has no guard and stays cheap


@pytest.mark.parametrize("k, graphs", [(1, ["A2"]), (2, ["A3"]), (4, ["A5", "D4"]), (10, ["A11", "D7", "E6"]),
                                       (16, ["A17", "D10", "E7"]), (28, ["A29", "D16", "E8"])])
def test_compatible_graphs(k, graphs):
    assert cli.compatible_graphs(k) == graphs


def test_every_check_has_a_claim():
    for suite in cli.SUITES:
        for cid, fname, _args in cli._plan(2, suite, 0, None):
            assert cid.split("[")[0] in cli.CLAIMS
            assert callable(getattr(cli, fname))


def test_example_check():
    ok, w = cli._example(1)
    assert ok
    assert w["order"] == 2 and w["beta_swap"] and not w["beta_identity"]
