import io
import json
import subprocess
import sys

import pytest

from hyperzeta import cli
from hyperzeta.bernoulli import BernoulliTable
from hyperzeta.roots import RootTable, check_table


def run(*argv):
    out = io.StringIO()
    code = cli.main(list(argv), out)
    return code, out.getvalue()


def test_eval_text():
    code, out = run("eval", "--order", "1", "--re", "2", "--im", "0")
    assert code == 0
    assert out.startswith("1.64493406684822")


def test_eval_json_and_methods():
    for method in ("auto", "series", "integral"):
        code, out = run("eval", "--order", "2", "--re", "3", "--method", method, "--format", "json")
        d = json.loads(out)
        assert code == 0 and abs(d["value"]["re"] - 1.406237025958343) < 1e-10
    code, out = run("eval", "--order", "2", "--re", "-0.5", "--method", "leftsum", "--format", "json")
    assert json.loads(out)["method"] == "left-rootsum"


def test_eval_exact_value_shows_rational():
    code, out = run("eval", "--order", "1", "--re", "-1")
    assert code == 0 and "(= -1/12)" in out


def test_eval_tolerance_flag():
    code, out = run("eval", "--order", "3", "--re", "2.5", "--tol", "1e-6", "--format", "json")
    assert code == 0 and json.loads(out)["abs_err"] <= 1e-6


def test_roots_csv_round_trip():
    code, out = run("roots", "--order", "2", "--count", "10", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "k,x,y,r,theta" and len(lines) == 11
    check_table(RootTable.from_csv(out, 2))


def test_roots_json_round_trip():
    code, out = run("roots", "--order", "5", "--count", "12", "--format", "json")
    t = RootTable.from_json(out)
    check_table(t)
    assert t.count == 12 and not t.certified


def test_bernoulli_exact():
    code, out = run("bernoulli", "--order", "2", "--max-n", "3", "--exact")
    assert code == 0
    assert [line.split()[1] for line in out.strip().splitlines()] == ["1", "-1/3", "1/18", "1/90"]


def test_bernoulli_json_round_trip():
    code, out = run("bernoulli", "--order", "3", "--max-n", "10", "--exact", "--format", "json")
    t = BernoulliTable.from_json(out)
    assert t.order == 3 and len(t) == 11


def test_residues():
    code, out = run("residues", "--order", "3")
    assert out.splitlines() == ["-1 3/40", "0 -3/2", "1 3"]
    code, out = run("residues", "--order", "2", "--format", "json")
    assert json.loads(out)["residues"][0] == {"pole": 0, "residue": "-2/3"}


def test_plot_data():
    code, out = run("plot-data", "--orders", "1,2,3", "--sigma-min", "1.5", "--sigma-max", "2", "--step", "0.25")
    lines = out.strip().splitlines()
    assert code == 0 and lines[0] == "sigma,zeta1,zeta2,zeta3" and len(lines) == 4
    row = [float(v) for v in lines[-1].split(",")]
    assert row[0] == 2.0 and abs(row[1] - 1.644934067) < 1e-9
    assert row[1] < row[2] < row[3]


def test_sigma_grid():
    assert cli.sigma_grid(1.1, 1.3, 0.1) == [1.1, 1.2, 1.3]
    with pytest.raises(cli.UsageError):
        cli.sigma_grid(2.0, 1.0, 0.1)


def test_verify_suites_exit_codes():
    code, out = run("verify", "--suite", "howard")
    assert code == 0 and "howard-conjecture" in out
    code, out = run("verify", "--suite", "tables", "--format", "json")
    # one reference-table cell disagrees beyond 1e-8
    assert code == 1
    failed = [d["check_id"] for d in json.loads(out) if not d["passed"]]
    assert failed == ["table-N2"]


@pytest.mark.parametrize("argv", [
    [],
    ["eval", "--order", "0", "--re", "1"],
    ["eval", "--order", "2"],
    ["eval", "--order", "2", "--re", "nan"],
    ["eval", "--order", "x", "--re", "1"],
    ["roots", "--order", "2", "--count", "0"],
    ["bernoulli", "--order", "2", "--max-n", "-1"],
    ["plot-data", "--sigma-min", "0.5"],
    ["plot-data", "--orders", "1,,0"],
    ["verify", "--suite", "bogus"],
    ["frobnicate"],
])
def test_usage_errors_exit_2(argv, capsys):
    code, out = run(*argv)
    assert code == 2 and out == ""
    err = json.loads(capsys.readouterr().err.strip().splitlines()[-1])
    assert err["error"] == "usage"


def test_numeric_failures_exit_1(capsys):
    code, _ = run("eval", "--order", "2", "--re", "1")
    assert code == 1
    assert json.loads(capsys.readouterr().err)["error"] == "PoleError"
    code, _ = run("bernoulli", "--order", "2", "--max-n", "600")
    assert code == 1


def test_deterministic_output():
    for argv in (["roots", "--order", "3", "--count", "20"], ["eval", "--order", "2", "--re", "-1.5", "--im", "2"],
                 ["bernoulli", "--order", "4", "--max-n", "12", "--exact"], ["verify", "--suite", "cross", "--format", "json"]):
        assert run(*argv) == run(*argv)


def test_console_script_and_module():
    a = subprocess.run(["hyperzeta", "roots", "--order", "2", "--count", "3"], capture_output=True, text=True)
    b = subprocess.run([sys.executable, "-m", "hyperzeta", "roots", "--order", "2", "--count", "3"],
                       capture_output=True, text=True)
    assert a.returncode == b.returncode == 0 and a.stdout == b.stdout
    c = subprocess.run(["hyperzeta", "eval", "--order", "0", "--re", "1"], capture_output=True, text=True)
    assert c.returncode == 2
