import json

import pytest

from nbett.cli import main

SIG = "assume f : (x:U) -> U\nassume a : U\nassume b : U\n"


@pytest.fixture
def sig_file(tmp_path):
    path = tmp_path / "sig.tt"
    path.write_text(SIG)
    return str(path)


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_check_ok(tmp_path, capsys):
    path = tmp_path / "ok.tt"
    path.write_text("assume a : U\ncheck a : U\n")
    code, out, _ = run(capsys, ["check", str(path)])
    assert code == 0 and "ok check at 2:1" in out


def test_check_lambda_against_u(tmp_path, capsys):
    path = tmp_path / "bad.tt"
    path.write_text("check (\\x. x) : U\n")
    code, _, err = run(capsys, ["check", str(path)])
    assert code == 1 and "non-Pi" in err


def test_check_unbound(tmp_path, capsys):
    path = tmp_path / "bad.tt"
    path.write_text("check q : U\n")
    code, _, err = run(capsys, ["check", str(path)])
    assert code == 1 and "unbound" in err


def test_parse_error_json(tmp_path, capsys):
    path = tmp_path / "bad.tt"
    path.write_text("assume a U\n")
    code, out, _ = run(capsys, ["check", str(path), "--json"])
    report = json.loads(out)
    assert code == 2
    assert report["status"] == "parse-error"
    assert report["diagnostics"][0]["line"] == 1 and report["diagnostics"][0]["col"] == 10


def test_missing_file(capsys):
    code, _, err = run(capsys, ["check", "/nonexistent/file.tt"])
    assert code == 4 and "cannot read" in err


def test_fuel_exhaustion_is_internal(sig_file, capsys):
    code, _, err = run(capsys, ["norm", sig_file, "-e", "f", "-t", "(x:U) -> U", "--fuel", "5"])
    assert code == 4 and "fuel" in err


def test_norm_json_is_stable(sig_file, capsys):
    argv = ["norm", sig_file, "-e", "f", "-t", "(x:U) -> U", "--json"]
    first, second = run(capsys, argv)[1], run(capsys, argv)[1]
    assert first == second
    assert json.loads(first) == {"command": "norm", "diagnostics": [], "normal_form": "\\x. f x", "status": "ok"}


def test_eq_reports_both_normal_forms(sig_file, capsys):
    code, out, _ = run(capsys, ["eq", sig_file, "-a", "f a", "-b", "f b", "-t", "U"])
    assert code == 3
    assert out.splitlines() == ["not equal", "  lhs: f a", "  rhs: f b"]


def test_eq_with_oracle(sig_file, capsys):
    code, out, _ = run(capsys, ["eq", sig_file, "-a", "f", "-b", "\\x. f x", "-t", "(x:U)->U", "--oracle-depth", "8"])
    assert code == 0 and out.splitlines() == ["equal", "oracle: equal"]


def test_type_error_in_expression(sig_file, capsys):
    code, _, err = run(capsys, ["norm", sig_file, "-e", "a a", "-t", "U"])
    assert code == 1
