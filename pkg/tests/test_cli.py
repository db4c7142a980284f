import json
import os
import subprocess
import sys

import pytest

from fusiongb.cli import CliConfig, main, run


def cli(*args, env=None):
    full = dict(os.environ, **(env or {}))
    return subprocess.run([sys.executable, "-m", "fusiongb", *args],
                          capture_output=True, text=True, env=full)


def test_fusion_dims_golden():
    p = cli("fusion-dims", "--lambda", "3", "--mu", "2", "--format", "json")
    assert p.returncode == 0
    assert p.stdout.strip() == '{"dimension":12,"graded":{"0":6,"1":4,"2":2}}'


def test_verify_param_json():
    p = cli("verify", "--lambda", "1", "--mu", "1", "--a", "param", "--format", "json")
    assert p.returncode == 0
    rep = json.loads(p.stdout)
    assert rep["ok"] and all(rep["theorem"]["checks"].values())
    assert rep["identities"]["passed"]


def test_usage_errors():
    assert cli("verify", "--lambda", "1", "--mu", "2").returncode == 2
    assert cli("gb", "--lambda", "2", "--mu", "1", "--a", "3/x").returncode == 2
    assert cli("gb", "--lambda", "-1", "--mu", "0").returncode == 2
    assert cli("gb", "--lambda", "2").returncode == 2
    assert cli("oracle", "--lambda", "2", "--mu", "1", "--a", "0").returncode == 2


def test_printed_identities_fail():
    p = cli("identities", "--lambda", "1", "--mu", "1", "--printed", "--format", "json")
    assert p.returncode == 1
    assert not json.loads(p.stdout)["printed_ok"]


def test_deterministic_output():
    args = ("verify", "--lambda", "2", "--mu", "2", "--format", "json")
    assert cli(*args).stdout == cli(*args).stdout


def test_batch_parallel_matches_serial():
    args = ("verify", "--range", "2", "--format", "json")
    serial = cli(*args, env={"FUSIONGB_THREADS": "1"})
    par = cli(*args, env={"FUSIONGB_THREADS": "2"})
    assert serial.returncode == par.returncode == 0
    assert serial.stdout == par.stdout
    assert len(json.loads(serial.stdout)["summary"]) == 6


@pytest.mark.parametrize("cmd", ["gb", "lt-ideal", "oracle", "identities", "verify", "fusion-dims"])
def test_text_mode(cmd, capsys):
    assert main([cmd, "--lambda", "2", "--mu", "1"]) == 0
    assert capsys.readouterr().out.strip()


def test_run_specialised():
    status, rep = run(CliConfig("lt-ideal", 2, 1, a=None))
    status0, rep0 = run(CliConfig("lt-ideal", 2, 1, a=0))
    assert status == status0 == 0
    assert sorted(rep["generators"]) == sorted(rep0["generators"])
    _, gb0 = run(CliConfig("gb", 2, 1, a=0))
    assert "f0^2*f1" in gb0["basis"]
