import json
import shutil
import subprocess
import sys

import pytest

from covariants import cli
from covariants.multilinear import verify


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_dims_json(capsys):
    code, out, _ = run(capsys, "dims", "--n", "3")
    doc = json.loads(out)
    assert code == 0
    assert doc["schema"] == cli.SCHEMA and doc["command"] == "dims" and doc["seed"] == 0
    assert doc["result"]["A"]["total"] == 16 and doc["result"]["B_plus"]["total"] == 48


def test_seed_echoed(capsys):
    _, out, _ = run(capsys, "dims", "--seed", "17")
    doc = json.loads(out)
    assert doc["seed"] == 17 and doc["config"]["seed"] == 17


def test_json_is_deterministic(capsys):
    args = ("verify", "duale", "--n", "2", "--seed", "3")
    _, a, _ = run(capsys, *args)
    _, b, _ = run(capsys, *args)
    assert a == b
    assert json.loads(a)["result"]["c"] == "-1"


def test_table_format(capsys):
    code, out, _ = run(capsys, "dims", "--n", "2", "--format", "table")
    assert code == 0 and "PASS" in out and "B+" in out


def test_poincare_table1(capsys):
    code, out, _ = run(capsys, "poincare", "--n", "3", "--target", "2e1", "--duality", "20",
                       "--divide", "5,6")
    res = json.loads(out)["result"]
    assert code == 0
    assert [r["multiplicity"] for r in res["table"]] == [0, 1, 0, 0, 1, 2, 2, 1, 1, 2, 4]
    assert res["division"]["exact"] is False


def test_poincare_rank2_redirects(capsys):
    code, _, err = run(capsys, "poincare", "--n", "2")
    assert code == 2 and "bruteforce" in err


def test_bruteforce(capsys):
    code, out, _ = run(capsys, "bruteforce", "--n", "2", "--target", "skew", "--k", "3")
    assert code == 0 and json.loads(out)["result"]["dims"] == [4]


def test_freeness_commands(capsys):
    code, out, _ = run(capsys, "freeness", "bplus", "--n", "2")
    assert code == 0 and json.loads(out)["result"]["total_rank"] == 16
    code, out, _ = run(capsys, "freeness", "bminus-sym")
    assert code == 0 and json.loads(out)["result"]["status"] == "PASS"
    code, _, _ = run(capsys, "freeness", "bminus-skew", "--n", "3")
    assert code == 2


@pytest.mark.parametrize("argv", [
    ("verify", "qq", "--mode", "sometimes"),
    ("verify", "qq", "--mode", "randomized:0"),
    ("verify", "qq", "--n", "5"),
    ("verify", "qq", "--field", "prime:7"),
    ("verify", "al", "--mode", "exhaustive"),
    ("dims", "--n", "9"),
    ("dims", "--threads", "0"),
    ("poincare", "--n", "3", "--divide", "a,b"),
    ("poincare", "--n", "3", "--source", "spin"),
])
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_argparse_rejects_unknown_identity(capsys):
    with pytest.raises(SystemExit) as e:
        cli.main(["verify", "nonsense"])
    assert e.value.code == 2


def test_infeasible(capsys):
    code, _, err = run(capsys, "verify", "qq", "--n", "3", "--mode", "exhaustive")
    assert code == 3 and "infeasible" in err
    code, _, _ = run(capsys, "bruteforce", "--n", "3", "--k", "10")
    assert code == 3


def test_failure_exit_code(capsys, monkeypatch):
    def broken(n=2, **kw):
        return verify.report("qq", n, "exhaustive", kw.get("seed", 0), False,
                             witness={"basis_indices": [0, 1, 2, 3]})
    monkeypatch.setitem(verify.VERIFIERS, "qq", broken)
    code, out, _ = run(capsys, "verify", "qq")
    doc = json.loads(out)
    assert code == 1 and doc["result"]["status"] == "FAIL" and "witness" in doc["result"]


def test_randomized_trials_flag(capsys):
    code, out, _ = run(capsys, "verify", "qq", "--mode", "randomized:3")
    res = json.loads(out)["result"]
    assert code == 0 and res["mode"] == "randomized" and res["evaluations"] == 3


def test_module_entry_point():
    exe = shutil.which("socov")
    cmd = [exe] if exe else [sys.executable, "-m", "covariants.cli"]
    out = subprocess.run(cmd + ["dims", "--n", "1"], capture_output=True, text=True, check=True)
    assert json.loads(out.stdout)["result"]["A"]["total"] == 4
