import json
import os
import subprocess
import sys

import pytest

from hauptmodul.cli import expand_series, main, run_verify


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_verify_q3(capsys):
    code, out = run(capsys, "verify", "--suite", "qseries", "--id", "Q3", "--order", "8", "--json")
    rep = json.loads(out)
    assert code == 0
    assert rep == [{"id": "Q3", "suite": "qseries", "status": "pass", "detail": "13n+6: ZERO",
                    "order": 8, "elapsed_ms": rep[0]["elapsed_ms"]}]


def test_verify_group_suite(capsys):
    code, out = run(capsys, "verify", "--suite", "group", "--json")
    reps = json.loads(out)
    assert code == 0 and len(reps) == 12
    assert all(r["status"] == "pass" for r in reps)
    assert any("order=1092" in r["detail"] for r in reps)


def test_unknown_id_exit_2(capsys):
    assert main(["verify", "--id", "NO_SUCH"]) == 2


def test_usage_error_exit_2(capsys):
    assert main(["verify", "--suite", "bogus"]) == 2
    assert main(["group"]) == 2


def test_order_too_small_is_a_failed_report(capsys):
    code, out = run(capsys, "verify", "--id", "Q23", "--order", "1", "--json")
    rep = json.loads(out)[0]
    assert code == 1 and rep["status"] == "fail" and "order" in rep["detail"]


def test_numeric_skipped_without_flag():
    reps = run_verify("all", ["N6", "E1"], None, None, False)
    # explicitly named ids run; a plain suite run would skip numeric
    assert [r.status for r in reps] == ["pass", "pass"]
    reps = [r for r in run_verify("exact") + run_verify("numeric")]
    assert all(r.status == "pass" for r in reps)


def test_all_suite_skips_numeric(monkeypatch):
    from hauptmodul import cli

    monkeypatch.setattr(cli, "run_check", lambda cid, s, o=None, t=None: cli.CheckResult(cid, s, "pass"))
    reps = cli.run_verify()
    assert {r.status for r in reps if r.suite == "numeric"} == {"skipped"}
    assert cli.exit_code(reps) == 0


def test_expand_a6(capsys):
    code, out = run(capsys, "expand", "--series", "a6", "--order", "7")
    assert code == 0 and out.strip() == "1/104: 1, 625/104: -1"


def test_expand_j(capsys):
    _, out = run(capsys, "expand", "--series", "j", "--order", "1")
    assert out.strip() == "-1: 1, 0: 744, 1: 196884"


def test_expand_tau_and_eta(capsys):
    pairs = expand_series("tau", 0)
    assert pairs == [(-1, 1), (0, -2)]
    _, out = run(capsys, "expand", "--series", "eta(13)", "--order", "2", "--json")
    assert json.loads(out) == [{"exponent": "13/24", "coefficient": "1"}]


def test_expand_unknown(capsys):
    assert main(["expand", "--series", "nope", "--order", "3"]) == 2


def test_group_commands(capsys):
    code, out = run(capsys, "group", "--subgroup-borel")
    assert code == 0 and out.strip() == "order: 78, index: 14"
    code, out = run(capsys, "group", "--enumerate")
    assert out.splitlines()[0] == "order: 1092"
    code, out = run(capsys, "group", "--relations")
    assert code == 0 and len(out.splitlines()) == 12


def test_deterministic_reports(capsys):
    a = json.loads(run(capsys, "verify", "--suite", "exact", "--json")[1])
    b = json.loads(run(capsys, "verify", "--suite", "exact", "--json")[1])
    strip = lambda rs: [{k: v for k, v in r.items() if k != "elapsed_ms"} for r in rs]
    assert strip(a) == strip(b)


def test_env_default_order():
    env = dict(os.environ, HAUPTMODUL_DEFAULT_ORDER="6")
    out = subprocess.run([sys.executable, "-m", "hauptmodul", "verify", "--id", "Q10", "--json"],
                         capture_output=True, text=True, env=env, check=True).stdout
    assert json.loads(out)[0]["order"] == 6
