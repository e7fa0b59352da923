import json
import math

from coulombw.cli import main, parse_complex
from coulombw.spectral import INFINITY


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_parse_complex():
    assert parse_complex("1+2i") == 1 + 2j
    assert parse_complex("-1.5-0.3i") == -1.5 - 0.3j
    assert parse_complex("(0.5+0.25i)") == 0.5 + 0.25j
    assert parse_complex("2i") == 2j
    assert parse_complex("3") == 3
    assert parse_complex("inf") == INFINITY


def test_eval_golden(capsys):
    code, out, _ = run(capsys, "eval", "K", "--beta", "0", "--m", "0.5", "--z", "2")
    assert code == 0
    rec = json.loads(out)
    assert abs(rec["value"]["re"] - math.exp(-1)) < 1e-10
    assert rec["command"] == "eval"
    assert rec["region"] == "DoublyDegenerate"
    code, out, _ = run(capsys, "eval", "I", "--beta", "0", "--m", "0.5", "--z", "2")
    assert abs(json.loads(out)["value"]["re"] - 2 * math.sinh(1)) < 1e-10


def test_eval_csv(capsys):
    code, out, _ = run(capsys, "eval", "K", "--beta", "0.7", "--m", "0.3", "--z", "1.5",
                       "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "re,im,err_est,method,region"
    assert len(lines) == 2


def test_exit_codes(capsys):
    code, _, err = run(capsys, "eval", "K", "--beta", "1", "--m", "0.5", "--z", "0")
    assert code == 2 and "precondition" in err
    code, _, err = run(capsys, "eval", "I", "--beta", "1", "--m", "0.3", "--z", "50")
    assert code == 3 and "numerical" in err
    code, _, err = run(capsys, "eval", "WAT", "--z", "1")
    assert code == 1
    code, _, err = run(capsys, "nonsense")
    assert code == 1
    code, _, err = run(capsys, "eval", "K", "--beta", "1", "--m", "0.5", "--z", "1;rm")
    assert code == 1
    # spectrum hit -> 4
    code, _, err = run(capsys, "resolvent", "--family", "nu-half", "--beta", "1",
                       "--bc", "inf", "--k", "0.5",
                       "--x-grid", "1", "2", "2", "--y-grid", "1", "2", "2")
    assert code == 4 and "spectrum" in err


def test_eigen_hydrogen(capsys):
    code, out, _ = run(capsys, "eigen", "--family", "nu-half", "--beta", "1",
                       "--bc", "inf", "--box", "0.2", "0.6", "-0.05", "0.05",
                       "--grid", "30", "5")
    assert code == 0
    recs = [json.loads(l) for l in out.strip().splitlines()]
    ks = [r["k"]["re"] for r in recs if "k" in r]
    assert any(abs(k - 0.5) < 1e-8 for k in ks)
    assert any(abs(k - 0.25) < 1e-8 for k in ks)
    assert "summary" in recs[-1]


def test_resolvent_symmetric_table(capsys):
    code, out, _ = run(capsys, "resolvent", "--family", "nu-half", "--beta", "0",
                       "--bc", "inf", "--k", "1",
                       "--x-grid", "0.5", "1.5", "3", "--y-grid", "0.5", "1.5", "3")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "x,y,re,im"
    vals = {}
    for ln in lines[1:]:
        x, y, re, im = ln.split(",")
        vals[(x, y)] = (re, im)
    for (x, y), v in vals.items():
        assert vals[(y, x)] == v


def test_project_table(capsys):
    code, out, _ = run(capsys, "project", "--beta", "1", "--m", "0.25", "--k", "0.8",
                       "--x-grid", "1", "2", "2", "--y-grid", "1", "2", "2")
    assert code == 0
    assert out.splitlines()[0] == "x,y,re,im"


def test_determinism_byte_identical(capsys):
    args = ("verify", "wronskian", "--seed", "7", "--cases", "12")
    _, out1, _ = run(capsys, *args)
    _, out2, _ = run(capsys, *args)
    assert out1 == out2
    args = ("eigen", "--family", "nu-half", "--beta", "1", "--bc", "inf",
            "--box", "0.2", "0.6", "-0.05", "0.05", "--grid", "24", "5")
    _, out1, _ = run(capsys, *args)
    _, out2, _ = run(capsys, *args)
    assert out1 == out2


def test_eval_branch_edges_and_besselfuncs(capsys):
    # X on the upper edge of the cut
    code, out, _ = run(capsys, "eval", "X", "--beta", "0.7", "--m", "0.3",
                       "--z", "-2", "--branch", "upper")
    assert code == 0
    rec = json.loads(out)
    assert rec["inputs"]["branch"] == "upper"
    # untagged point on the cut is a precondition error
    code, _, _ = run(capsys, "eval", "X", "--beta", "0.7", "--m", "0.3", "--z", "-2")
    assert code == 2
    code, out, _ = run(capsys, "eval", "bessel-K", "--m", "0.5", "--z", "2")
    assert code == 0
    assert abs(json.loads(out)["value"]["re"] - math.exp(-2)) < 1e-10
    code, out, _ = run(capsys, "eval", "zero-j", "--beta", "0", "--m", "0.3", "--z", "2")
    assert code == 0
    assert abs(json.loads(out)["value"]["re"] - 2 ** 0.8) < 1e-10


def test_project_positive_and_zero(capsys):
    code, out, _ = run(capsys, "project", "--beta", "0.2+2.2i", "--m", "0.31",
                       "--mu", "0.8", "--edge", "+",
                       "--x-grid", "1", "2", "2", "--y-grid", "1", "2", "2")
    assert code == 0
    assert out.splitlines()[0] == "x,y,re,im"
    code, out, _ = run(capsys, "project", "--beta", "0.4+1.3i", "--m", "0.27",
                       "--zero", "--x-grid", "1", "2", "2", "--y-grid", "1", "2", "2")
    assert code == 0
    # mu outside admissible strip -> precondition
    code, _, _ = run(capsys, "project", "--beta", "0.2+2.2i", "--m", "0.31",
                     "--mu", "5.0", "--x-grid", "1", "2", "2", "--y-grid", "1", "2", "2")
    assert code == 2


def test_verify_suite_exit(capsys):
    code, out, _ = run(capsys, "verify", "reductions")
    assert code == 0
    recs = [json.loads(l) for l in out.strip().splitlines()]
    assert recs[-1]["summary"]["failed"] == 0
    code, _, err = run(capsys, "verify", "no-such-suite")
    assert code == 1
