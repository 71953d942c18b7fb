import json
import os
import subprocess

import pytest

CLI = os.environ.get("NORMFF_CLI")

pytestmark = pytest.mark.skipif(not CLI, reason="NORMFF_CLI not set")


def run(*args, env=None):
    full_env = dict(os.environ)
    if env:
        full_env.update(env)
    return subprocess.run([CLI, *args], capture_output=True, text=True, env=full_env)


def test_count_csv():
    r = run("count", "--q", "3", "--n", "2", "--method", "brute")
    assert r.returncode == 0
    lines = r.stdout.strip().splitlines()
    assert lines[0] == "q,n,method,B,f1,f2,f3,f4,f5"
    assert lines[1].startswith("3,2,brute,5")


def test_count_series_includes_degree_zero():
    r = run("count", "--q", "3", "--n", "0", "--method", "series")
    assert r.returncode == 0
    assert "3,0,series,1" in r.stdout


def test_count_json():
    r = run("count", "--q", "5", "--n", "3", "--method", "parts", "--format", "json")
    assert r.returncode == 0
    rows = json.loads(r.stdout)
    assert rows[0]["B"] == str(sum(int(x) for x in rows[0]["f_part_sizes"]))


def test_represent_exit_codes():
    ok = run("represent", "--q", "3", "--poly", "0,1")
    assert ok.returncode == 0
    assert json.loads(ok.stdout) == {"representable": True, "A": [0], "B": [1]}

    no = run("represent", "--q", "3", "--poly", "2,1")
    assert no.returncode == 1
    assert json.loads(no.stdout) == {"representable": False}

    bad = run("represent", "--q", "3", "--poly", "1,2")  # non-monic
    assert bad.returncode == 2

    garbage = run("represent", "--q", "3", "--poly", "zebra")
    assert garbage.returncode == 2

    even_q = run("count", "--q", "4", "--n", "2")
    assert even_q.returncode == 2


def test_budget_env_and_flag():
    blown = run("count", "--q", "3", "--n", "10", "--method", "brute",
                env={"NORMFIELD_BUDGET": "100"})
    assert blown.returncode == 3

    override = run("count", "--q", "3", "--n", "4", "--method", "brute",
                   "--budget", "1000000", env={"NORMFIELD_BUDGET": "10"})
    assert override.returncode == 0


def test_verify_exit_code_and_determinism():
    args = ("verify", "--suite", "elementary", "--q", "3", "--degmax", "3")
    a = run(*args, "--threads", "1")
    b = run(*args, "--threads", "4")
    assert a.returncode == 0
    assert a.stdout == b.stdout
    assert "PASS" in a.stdout and "FAIL" not in a.stdout


def test_constant_precision():
    r = run("constant", "--q", "3", "--format", "json")
    assert r.returncode == 0
    val = json.loads(r.stdout)["value"]
    assert val.startswith("1.3202707872")
    assert len(val.replace(".", "").lstrip("0")) >= 15
