import json

import pytest

from grothkit.cli import main
from grothkit.scan import ScanRecord, run_scan


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_compute(capsys):
    assert run(capsys, "compute", "21", "--kind", "schubert") == (0, "x1\n", "")
    code, out, _ = run(capsys, "compute", "1342", "--kind", "groth", "--engine", "dd", "--format", "json")
    data = json.loads(out)
    assert data["terms"][0] == [[1, 1, 0, 0], "1"] and data["terms"][-1] == [[1, 1, 1, 0], "-2"]
    code, out, _ = run(capsys, "compute", "1342", "--variant", "double", "--engine", "bpd")
    assert code == 0 and "y2" in out
    code, out, _ = run(capsys, "compute", "132", "--format", "latex")
    assert code == 0 and "x" in out


def test_errors(capsys):
    assert run(capsys, "compute", "1224")[0] == 1
    assert run(capsys, "compute", "1234567", "--engine", "bpd")[0] == 2
    assert main(["factor", "1342"]) == 2
    with pytest.raises(SystemExit) as exc:
        main(["compute", "12", "--nope"])
    assert exc.value.code == 1


def test_bpds(capsys):
    assert run(capsys, "bpds", "1342", "--count")[1] == "3\n"
    code, out, _ = run(capsys, "bpds", "1342", "--render")
    assert out.count("r") >= 3 and len(out.strip().split("\n\n")) == 3


def test_factor_and_classify(capsys):
    code, out, _ = run(capsys, "factor", "58326147")
    data = json.loads(out)
    assert code == 0 and data["lambda"][:5] == [4, 4, 2, 1, 1] and len(data["factors"]) == 2
    code, out, _ = run(capsys, "classify", "1342")
    data = json.loads(out)
    assert data["grothendieck"]["patterns"] is False
    assert data["grothendieck"]["witness"] == {"alpha": [1, 1, 1, 0], "coeff": "-2"}


def test_scan_s4(tmp_path, capsys):
    out = tmp_path / "s4.jsonl"
    code, text, _ = run(capsys, "scan", "--n", "4", "--out", str(out), "--workers", "1")
    assert code == 0 and "total=24 zero_one=22" in text
    lines = out.read_text().splitlines()
    assert len(lines) == 24
    recs = [json.loads(line) for line in lines]
    assert [r["perm"] for r in recs] == sorted(r["perm"] for r in recs)
    assert {r["perm"] for r in recs if not r["zero_one_patterns"]} == {"1342", "1432"}
    assert all(r["factorization_verified"] for r in recs if r["zero_one_patterns"])
    assert all(r["engines_agree"] for r in recs)


def test_scan_deterministic_and_resumable(tmp_path):
    a, b = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
    run_scan(4, ("zeroone", "conjectures", "factorization"), a, workers=1)
    run_scan(4, ("zeroone", "conjectures", "factorization"), b, workers=3)
    assert a.read_bytes() == b.read_bytes()
    lines = a.read_text().splitlines(keepends=True)
    partial = tmp_path / "c.jsonl"
    partial.write_text("".join(lines[:7]) + lines[7][:20])  # torn last line
    summary, _ = run_scan(4, ("zeroone", "conjectures", "factorization"), partial, workers=1, resume=True)
    assert summary.skipped == 7 and partial.read_bytes() == a.read_bytes()


def test_scan_n1_and_engines(capsys):
    code, text, _ = run(capsys, "scan", "--n", "1", "--workers", "1")
    assert code == 0 and "total=1" in text
    summary, recs = run_scan(5, ("engines",), workers=1)
    assert summary.ok and all(r.engines_agree for r in recs)


def test_scan_flags_violation():
    rec = ScanRecord("12", 2, 0, 0, True, False, True, True, None, None, None, None, "skipped", None, None)
    assert rec.failures() == ["six-pattern theorem"]


def test_verify_quick(capsys):
    code, out, _ = run(capsys, "verify", "--quick")
    assert code == 0 and out.count("[PASS]") == 11
