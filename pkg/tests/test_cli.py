import io

import pytest

from pencilkit.cli import main
from pencilkit.formats import parse_pencil, parse_points, parse_subspace

CONIC = "# x2^2 - x1 x3\nquadrics 3 1 gf5\n0 0 -1 1 0 0\n"


@pytest.fixture
def conic_file(tmp_path):
    path = tmp_path / "conic.txt"
    path.write_text(CONIC)
    return path


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_canonical(capsys):
    code, out, _ = run(capsys, "canonical", "--n", "3", "--field", "gf7")
    assert code == 0
    assert parse_pencil(out).dim == (6, 3)


def test_realize_eigen_verify(capsys, tmp_path, conic_file):
    pencil = tmp_path / "p.txt"
    pts = tmp_path / "pts.txt"
    code, _, err = run(capsys, "realize", "--quadrics", str(conic_file), "--out", str(pencil),
                       "--points-out", str(pts), "--no-meta")
    assert code == 0
    assert "eigenvalues=6 points=6 max_eigenspace_dim=1 result=pass" in err
    assert parse_points(pts.read_text())[2].__len__() == 6

    code, out, _ = run(capsys, "eigen", "--pencil", str(pencil), "--values")
    assert code == 0 and parse_points(out)[2] == parse_points(pts.read_text())[2]

    code, out, _ = run(capsys, "eigen", "--pencil", str(pencil), "--eigenvalues", "1,1,1;1,1,2")
    assert code == 0 and out.startswith("points 5 1 gf5")

    code, out, _ = run(capsys, "verify", "--pencil", str(pencil), "--no-meta")
    assert code == 0
    assert out.splitlines()[-1] == "primary=6 oracle=6 result=match"

    code, out, _ = run(capsys, "eigenspace", "--pencil", str(pencil), "--lambda", "1,2,4")
    assert code == 0 and parse_subspace(out).dim == 1

    code, out, _ = run(capsys, "squareize", "--pencil", str(pencil))
    sq = parse_pencil(out)
    assert code == 0 and sq.a == sq.b


def test_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("pencil 2 1 1 gf3\nmatrix 1\n1\nmatrix 2\n2\n"))
    code, out, _ = run(capsys, "eigen", "--pencil", "-")
    assert code == 0 and out == "points 1 1 gf3\n1\n"


def test_reflect_report(capsys, tmp_path):
    src = tmp_path / "b.txt"
    src.write_text("pencil 3 1 1 gf5\nmatrix 1\n1\nmatrix 2\n0\nmatrix 3\n0\n")
    code, out, err = run(capsys, "reflect", "--pencil", str(src), "--t", "2", "--e0-track")
    assert code == 0
    assert parse_pencil(out).dim == (5, 2)
    assert err.splitlines()[0] == "t=0 dim=(1,1) e0=no"
    assert err.splitlines()[-1] == "first_sufficient_t=1"


def test_preprojective(capsys):
    code, out, _ = run(capsys, "preprojective", "--n", "3", "--count", "4", "--field", "gf3")
    assert code == 0
    assert "k=3 dim=(8,21) form=1 built=(8,21) empty=yes" in out


def test_check_suite(capsys):
    code, out, _ = run(capsys, "check", "--suite", "quadrics", "--count", "50", "--no-meta")
    assert code == 0
    assert out.splitlines()[-1] == "suite=quadrics summary passed=2/2"


@pytest.mark.parametrize(
    "argv,code",
    [
        ([], 1),
        (["canonical", "--n", "3"], 1),
        (["canonical", "--n", "3", "--field", "gf4"], 1),
        (["check", "--suite", "nope"], 1),
        (["eigen", "--pencil", "/nonexistent/file"], 1),
        (["canonical", "--n", "0", "--field", "gf3"], 3),
    ],
)
def test_exit_codes(capsys, argv, code):
    assert run(capsys, *argv)[0] == code


def test_format_error_exit(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("pencil 1 2 1 gf5\nmatrix 1\n1 z\n")
    code, _, err = run(capsys, "eigen", "--pencil", str(bad))
    assert code == 2 and "line 3" in err


def test_domain_error_exit(capsys, tmp_path):
    nonreduced = tmp_path / "nr.txt"
    nonreduced.write_text("pencil 2 1 1 gf5\nmatrix 1\n0\nmatrix 2\n0\n")
    code, _, err = run(capsys, "eigen", "--pencil", str(nonreduced))
    assert code == 3 and "not reduced" in err
    rational = tmp_path / "q.txt"
    rational.write_text("pencil 2 1 1 rational\nmatrix 1\n1/2\nmatrix 2\n1\n")
    assert run(capsys, "eigen", "--pencil", str(rational))[0] == 3
    code, out, _ = run(capsys, "eigen", "--pencil", str(rational), "--values", "--eigenvalues", "1,2;1,0")
    assert code == 0 and out == "points 2 1 rational\n1 2\n"
