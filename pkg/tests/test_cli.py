import json
import subprocess
import sys

from unusual_orders import cli, config
from unusual_orders.contfrac import fundamental_unit


def run(capsys, *argv):
    code = cli.run(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_classify_exit_codes(capsys):
    code, out = run(capsys, "--json", "classify", "42", "3")
    assert code == 0 and json.loads(out)["unusual"] is True
    code, _ = run(capsys, "classify", "10", "4")
    assert code == 1
    for route in ("thm29", "cor28", "thm39"):
        code, out = run(capsys, "--json", "classify", "10", "2", "--route", route)
        assert code == 0 and json.loads(out)["route"] == route


def test_argument_errors(capsys):
    assert cli.run(["classify", "10"]) == 2
    assert cli.run(["classify", "12", "3"]) == 2  # d not squarefree
    assert cli.run(["classify", "15", "3", "--route", "thm39"]) == 2  # N(eps) = 1
    assert cli.run(["nonsense"]) == 2
    assert cli.run(["census"]) == 2
    capsys.readouterr()


def test_conductors_and_type_form(capsys):
    code, out = run(capsys, "--json", "conductors", "15")
    rec = json.loads(out)
    assert code == 0
    assert sorted(map(int, rec["reduced"])) == [2, 3, 5, 6, 10, 15, 30]
    assert sorted(map(int, rec["bounded"])) == [2, 3, 5, 6, 10, 15, 30]
    assert rec["exact"] is True and rec["bound"] == "30"
    code, out = run(capsys, "--json", "conductors", "10")
    rec = json.loads(out)
    assert rec["exact"] is False and rec["bound"] == "100"
    code, out = run(capsys, "--json", "type-form", "165")
    assert json.loads(out)["type"] == "7" and json.loads(out)["form"] == "8"
    code, out = run(capsys, "type-form", "34")
    assert "type=None" in out


def test_json_round_trip(capsys):
    code, out = run(capsys, "--json", "info", "94")
    rec = json.loads(out)
    assert json.loads(json.dumps(rec)) == rec
    eps = fundamental_unit(cli.field_data(94))
    assert int(rec["u"]) == eps.u and int(rec["v"]) == eps.v
    code, out = run(capsys, "--json", "attributes", "430")
    rec = json.loads(out)
    assert rec == {"kind": "attributes", "d": "430", "v_divisible": True, "v3_divisible": True,
                   "beta": "6", "t": "3", "unit_norm": "1", "class_number": "2"}


def test_census_and_search_jobs(capsys, tmp_path):
    _, one = run(capsys, "--json", "census", "--max-disc", "5000")
    _, two = run(capsys, "--json", "census", "--max-disc", "5000", "--jobs", "2")
    assert one == two
    last = json.loads(one.splitlines()[-1])
    assert last["kind"] == "census-count"
    _, one = run(capsys, "--json", "search-v", "--max-d", "3000")
    _, two = run(capsys, "--json", "search-v", "--max-d", "3000", "--jobs", "2")
    assert one == two
    assert [json.loads(x)["d"] for x in one.splitlines() if json.loads(x)["kind"] == "search-v"] == ["46", "430", "1817"]
    log = tmp_path / "c.jsonl"
    run(capsys, "census", "--max-disc", "3000", "--log", str(log))
    code, out = run(capsys, "--json", "census", "--max-disc", "3000", "--resume", str(log))
    assert code == 0 and json.loads(out.splitlines()[-1])["count"] == str(len(out.splitlines()) - 1)


def test_budget_exhaustion(capsys, monkeypatch):
    monkeypatch.setattr(config, "STEP_BUDGET", 3)
    fundamental_unit.cache_clear()
    assert cli.run(["info", "9949"]) == 3
    capsys.readouterr()


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "unusual_orders.cli", "classify", "42", "3"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "unusual=True" in proc.stdout
