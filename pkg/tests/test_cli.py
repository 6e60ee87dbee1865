import json
import os
import subprocess
import sys

import pytest

from bepoly.cli import main, parse_range


def run(*args, env=None):
    full_env = dict(os.environ)
    full_env.pop("BEPOLY_CACHE", None)
    full_env.update(env or {})
    return subprocess.run([sys.executable, "-m", "bepoly", *args], capture_output=True, text=True, env=full_env,
                          timeout=600)


def test_parse_range():
    assert parse_range("2..5") == range(2, 6)
    assert parse_range("3") == range(3, 4)


def test_compute_tables():
    res = run("compute", "bernoulli", "--n", "0..4")
    assert res.returncode == 0
    assert res.stdout.splitlines() == ["0\t1", "1\t-1/2", "2\t1/6", "3\t0", "4\t-1/30"]
    res = run("compute", "bpoly", "--n", "2..2")
    assert res.stdout.strip().split("\t")[1] == "x^2 - x + 1/6"
    res = run("compute", "euler", "--n", "0..2", "--format", "json")
    assert [json.loads(line)["value"] for line in res.stdout.splitlines()] == ["1", "0", "-1"]


def test_bad_flags_exit_2():
    assert run("compute", "bernoulli", "--n", "x..y").returncode == 2
    assert run("compute", "nonsense", "--n", "0..2").returncode == 2
    assert run("verify", "no_such_identity", "--n", "1..2").returncode == 2


def test_verify_all_small():
    res = run("verify", "--all", "--n", "1..4")
    assert res.returncode == 0, res.stderr
    reports = [json.loads(line) for line in res.stdout.splitlines()]
    assert reports and all(r["holds"] for r in reports)


def test_verify_out_of_domain_notice():
    res = run("verify", "miki", "--n", "3..3")
    assert res.returncode == 0
    assert res.stdout == ""
    assert "domain" in res.stderr


def test_verify_poles_recorded():
    res = run("verify", "thm_1_3_eq_1_13", "--n", "2..5")
    assert res.returncode == 0
    for line in res.stdout.splitlines():
        rep = json.loads(line)
        assert rep["holds"] and rep["pole_set"]["t"][0] == "0"


def test_jobs_do_not_change_output():
    one = run("verify", "--all", "--n", "1..4", "--jobs", "1")
    eight = run("verify", "--all", "--n", "1..4", "--jobs", "8")
    assert one.returncode == eight.returncode == 0
    assert one.stdout == eight.stdout


def test_text_format():
    res = run("verify", "woodcock", "--n", "1..2", "--format", "text")
    assert res.returncode == 0 and "woodcock" in res.stdout


def test_crosscheck(tmp_path):
    good = tmp_path / "good.tsv"
    good.write_text("0\t1\n1\t-1/2\n4\t-1/30\n")
    assert run("crosscheck", "bernoulli", "--golden", str(good)).returncode == 0
    bad = tmp_path / "bad.tsv"
    bad.write_text("0\t1\n4\t1/30\n")
    res = run("crosscheck", "bernoulli", "--golden", str(bad))
    assert res.returncode == 1
    assert "n=4" in res.stdout
    empty = tmp_path / "empty.tsv"
    empty.write_text("")
    res = run("crosscheck", "bernoulli", "--golden", str(empty))
    assert res.returncode == 0 and "warning" in res.stderr.lower()
    junk = tmp_path / "junk.tsv"
    junk.write_text("four\tminus one thirtieth\n")
    assert run("crosscheck", "bernoulli", "--golden", str(junk)).returncode == 2
    assert run("crosscheck", "bernoulli", "--golden", str(tmp_path / "missing.tsv")).returncode == 2


def test_shipped_golden_files():
    from bepoly.sequences import SEQUENCE_FILES  # noqa: F401
    data = os.path.join(os.path.dirname(__import__("bepoly").__file__), "data")
    for kind in ("bernoulli", "euler", "e0"):
        res = run("crosscheck", kind, "--golden", os.path.join(data, kind + ".tsv"))
        assert res.returncode == 0, res.stdout


def test_corrupted_cache_rebuilt(tmp_path):
    cache = tmp_path / "cache"
    assert run("--cache", str(cache), "compute", "bernoulli", "--n", "0..10").returncode == 0
    (cache / "bernoulli.tsv").write_text("0\t1\n1\t7\n")
    res = run("compute", "bernoulli", "--n", "0..4", env={"BEPOLY_CACHE": str(cache)})
    assert res.returncode == 0
    assert "rebuilding" in res.stderr
    assert res.stdout.splitlines()[4] == "4\t-1/30"
    assert (cache / "bernoulli.tsv").read_text().splitlines()[1] == "1\t-1/2"


def test_check_and_expr():
    from bepoly.dsl import shipped_path
    assert run("check", shipped_path("miki"), "--n", "4..6").returncode == 0
    assert run("expr", "B(n,0)", "Bnum(n)", "--n", "9").returncode == 0
    res = run("expr", "E(n,x)", "E(n,y)", "--n", "2")
    assert res.returncode == 1 and "residual" in res.stderr
    assert run("expr", "B(1,z)", "1/2 - x - y", "--let", "z = 1 - x - y", "--n", "1").returncode == 0
    assert run("expr", "B(2,", "0", "--n", "1").returncode == 2


def test_list():
    res = run("list")
    assert res.returncode == 0 and "miki" in res.stdout and "thm_1_1_i" in res.stdout


def test_selftest_quick():
    res = run("selftest", "--quick")
    assert res.returncode == 0, res.stdout
    assert res.stdout.count("[PASS]") == 11


def test_main_in_process(capsys):
    import io
    out, err = io.StringIO(), io.StringIO()
    assert main(["verify", "miki", "--n", "4..5"], out, err) == 0
    assert len(out.getvalue().splitlines()) == 2
    assert main(["verify", "--n", "1..2"], out, err) == 2
