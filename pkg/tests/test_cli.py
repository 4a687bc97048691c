import json

import pytest

from sl3split.cli import main, parse_matrix
from sl3split.errors import ParseError


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_parse_matrix_literal():
    assert parse_matrix("1,0,0;4,1,0;4,4,1") == ((1, 0, 0), (4, 1, 0), (4, 4, 1))
    assert parse_matrix(" [[1,0,0],[4,1,0],[4,4,1]] ") == ((1, 0, 0), (4, 1, 0), (4, 4, 1))


def test_parse_matrix_errors_carry_position():
    with pytest.raises(ParseError, match="row 2"):
        parse_matrix("1,0,0;4,1;4,4,1")
    with pytest.raises(ParseError, match="entry 3"):
        parse_matrix("1,0,x;4,1,0;4,4,1")
    with pytest.raises(ParseError, match="position"):
        parse_matrix("[[1,0,0],[4,1,0],")
    with pytest.raises(ParseError):
        parse_matrix("[[1,0],[4,1],[4,4]]")


def test_parse_matrix_from_file(tmp_path):
    f = tmp_path / "m.txt"
    f.write_text("1,0,0;4,1,0;4,4,1\n")
    assert parse_matrix(str(f)) == ((1, 0, 0), (4, 1, 0), (4, 4, 1))


def test_split_command(capsys):
    code, out, _ = run_cli(capsys, "split", "1,0,0;4,1,0;4,4,1")
    assert code == 0
    data = json.loads(out)
    assert data["s"] == 1
    assert data["plucker_primed"] == [-4, -4, -1, -12, 4, -1]
    assert data["scaled"] == [-1, -1, -1, -3, 1, -1]
    assert data["cell"] == "BwlB"


def test_split_rejects_nonmember(capsys):
    code, _, err = run_cli(capsys, "split", "1,0,0;1,1,0;0,0,1")
    assert code == 2
    assert "not 0 mod 4" in err


def test_split_rejects_malformed(capsys):
    code, _, err = run_cli(capsys, "split", "1,0;4,1")
    assert code == 2
    assert "row" in err


def test_plucker_command(capsys):
    code, out, _ = run_cli(capsys, "plucker", "[[1,0,0],[0,1,0],[-4,0,1]]")
    assert code == 0
    data = json.loads(out)
    assert data["plucker_primed"] == [4, 0, -1, -4, 0, -1]
    assert data["scaled"] == [1, 0, -1, -1, 0, -1]


def test_factor_command(capsys):
    code, out, _ = run_cli(capsys, "factor", "1,0,0;4,1,0;4,4,1")
    assert code == 0
    data = json.loads(out)
    assert data["blocks"] == [[1, 0, 4, 1], [1, 0, 4, 1], [1, 0, 4, 1]]
    assert data["left_unipotent"] == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]


def test_cocycle_command(capsys):
    code, out, _ = run_cli(capsys, "cocycle", "1,0,0;4,1,0;4,4,1", "1,2,3;0,1,1;0,0,1")
    assert code == 0
    assert json.loads(out)["sigma"] == 1


def test_lift_command(capsys):
    code, out, _ = run_cli(capsys, "lift", "1,0,0;0,1,0;0,0,1")
    assert code == 0
    data = json.loads(out)
    assert data["s"] == 1 and data["lift"][1] == 1


def test_coset_rep_command(capsys):
    code, out, _ = run_cli(capsys, "coset-rep", "1,0,0;4,1,0;4,4,1")
    assert code == 0
    data = json.loads(out)
    assert data["representative"] == [-1, 0, 3, -3, -2, -9]


def test_enumerate_command(capsys):
    code, out, _ = run_cli(capsys, "enumerate", "--a1", "1", "--a2", "-1")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "A1,B1,C1,A2,B2,C2,s"
    assert "1,0,-1,-1,0,-1,1" in lines[1:]


def test_verify_command_ok(capsys):
    code, out, _ = run_cli(capsys, "verify", "homomorphism", "--trials", "50",
                           "--seed", "7")
    assert code == 0
    assert json.loads(out)["ok"] is True


def test_verify_reproducible(capsys):
    _, out1, _ = run_cli(capsys, "verify", "kronecker", "--trials", "200", "--seed", "3")
    _, out2, _ = run_cli(capsys, "verify", "kronecker", "--trials", "200", "--seed", "3")
    d1, d2 = json.loads(out1), json.loads(out2)
    assert d1["cases"] == d2["cases"] and d1["failures"] == d2["failures"]


def test_verify_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "homomorphism", "--trials", "0"])
    assert exc.value.code == 2


def test_verify_failure_exits_nonzero(capsys, monkeypatch):
    from sl3split import cli as cli_mod
    from sl3split.verify import Report

    def broken_suite(trials, seed, bound):
        rep = Report("homomorphism", cases=1)
        rep.fail(check="stub", witness=(1, 2, 3))
        return rep

    monkeypatch.setitem(cli_mod.SUITES, "homomorphism", broken_suite)
    code, out, _ = run_cli(capsys, "verify", "homomorphism", "--format", "text")
    assert code == 1
    assert "witness" in out and "FAILED" in out
