import json
import subprocess
import sys

import pytest

from almval.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_valuation(capsys):
    assert run(capsys, "valuation", "60", "60")[:2] == (0, "176\n")
    code, out, _ = run(capsys, "valuation", "1", "1", "--method", "both")
    assert (code, out) == (0, "closed=2 direct=2 agree=true\n")


def test_valuation_domain_error(capsys):
    code, out, err = run(capsys, "valuation", "2", "1")
    assert code == 2 and out == "" and "l <= m" in err


def test_valuation_jsonl(capsys):
    _, out, _ = run(capsys, "valuation", "13", "20", "--method", "both", "--format", "jsonl")
    assert json.loads(out) == {"l": 13, "m": 20, "closed": 40, "direct": 40, "agree": True}


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["valuation", "x"])
    assert exc.value.code == 2


def test_figure_60(capsys):
    code, out, _ = run(capsys, "figure", "60", "32")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "m_prime,m,v2"
    assert [int(r.split(",")[2]) for r in lines[1:]] == [176] * 8 + [180] * 8 + [179] * 8 + [180] * 8
    assert lines[1] == "1,60,176" and lines[32] == "32,91,180"


def test_figure_400_rows(tmp_path, capsys):
    path = tmp_path / "fig1.csv"
    code, out, _ = run(capsys, "figure", "60", "400", "--out", str(path))
    assert code == 0 and out == ""
    lines = path.read_text().splitlines()
    assert len(lines) == 401 and lines[-1].startswith("400,459,")


def test_figure_l1(capsys):
    _, out, _ = run(capsys, "figure", "1", "8")
    assert [int(r.split(",")[2]) for r in out.splitlines()[1:]] == [2, 2, 3, 3, 2, 2, 4, 4]


def test_figure_unwritable(capsys, tmp_path):
    code, _, err = run(capsys, "figure", "1", "8", "--out", str(tmp_path / "no" / "such" / "f.csv"))
    assert code != 0 and "cannot write" in err


def test_reduce_single(capsys):
    code, out, _ = run(capsys, "reduce", "13")
    assert (code, out) == (0, "omega={1,2,1} composition={1,2,1} equal=true constant=36\n")


def test_reduce_trace(capsys):
    code, out, _ = run(capsys, "reduce", "1", "--trace")
    lines = out.splitlines()
    assert lines[0] == "omega={1} composition={1} equal=true constant=2"
    recs = [json.loads(s) for s in lines[1:]]
    assert len(recs) == 1 and recs[0]["exponent"] == 1 and set(recs[0]["after"]) == {2}


def test_reduce_table(capsys):
    code, out, _ = run(capsys, "reduce", "--table", "4", "15")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "l,binary,omega,composition,equal,constant"
    assert len(lines) == 13
    assert lines[10] == "13,1101,1 2 1,1 2 1,1,36"


def test_reduce_needs_argument(capsys):
    assert run(capsys, "reduce")[0] == 2


def test_collatz(capsys):
    code, out, _ = run(capsys, "collatz", "63")
    assert (code, out) == (0, "orbit={63,95,143,215,323,485,728} predicted=6 observed=6 agree=true\n")
    assert run(capsys, "collatz", "1")[1] == "orbit={1,2} predicted=1 observed=1 agree=true\n"


def test_collatz_scan(capsys):
    code, out, _ = run(capsys, "collatz", "--scan", "1000")
    assert (code, out) == (0, "checked=1000 agreements=1000 failures=0\n")


def test_verify_valuation(capsys):
    code, out, _ = run(capsys, "verify", "valuation", "--limit", "100")
    assert code == 0
    assert all(line.startswith("PASS") for line in out.splitlines()[:-1])
    assert out.splitlines()[-1].endswith("0 failed")


def test_verify_stirling(capsys):
    code, out, _ = run(capsys, "verify", "stirling", "--limit", "8")
    assert code == 0 and "PASS v2(S(2^n, k)) = s2(k) - 1 (n <= 8)" in out


def test_verify_failure_exit_code(capsys, monkeypatch):
    import almval.verify as ver
    monkeypatch.setitem(ver.SUITES, "arith", lambda limit=None: iter([ver.Check("x", False, "counterexample (1, 2)")]))
    code, out, _ = run(capsys, "verify", "arith")
    assert code == 1 and "FAIL x: counterexample (1, 2)" in out


def test_verify_all_rejects_limit(capsys):
    assert run(capsys, "verify", "all", "--limit", "5")[0] == 2


def test_symmetry(capsys, tmp_path):
    code, out, _ = run(capsys, "symmetry", "1", "31")
    assert code == 0 and out.startswith("initial={2,3,2} center=3")
    path = tmp_path / "s9.csv"
    code, out, _ = run(capsys, "symmetry", "9", "400", "--out", str(path))
    assert code == 0 and (out.startswith("initial=") or out == "model=none\n")
    lines = path.read_text().splitlines()
    assert lines[0] == "j,m,v2" and len(lines) == 401 and lines[1] == "1,9,25"


def test_symmetry_53_csv(capsys):
    code, out, _ = run(capsys, "symmetry", "53", "400", "--format", "csv")
    assert code == 0 and len(out.splitlines()) == 401


def test_deterministic_subprocess():
    cmd = [sys.executable, "-m", "almval", "reduce", "--table", "1", "40"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and len(a.splitlines()) == 41
