import subprocess
import sys

import pytest

import printed_tables as printed
from losanitsch import oeis
from losanitsch.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_triangle_L_golden(capsys):
    code, out, _ = run(capsys, "triangle", "L", "--rows", "6")
    assert code == 0
    assert out == (
        "1 0 0  0 0 0 0\n"
        "1 1 0  0 0 0 0\n"
        "1 1 1  0 0 0 0\n"
        "1 2 2  1 0 0 0\n"
        "1 2 4  2 1 0 0\n"
        "1 3 6  6 3 1 0\n"
        "1 3 9 10 9 3 1\n"
    )


def test_triangle_epsilon_p3(capsys):
    code, out, _ = run(capsys, "triangle", "epsilon", "--p", "3", "--rows", "6")
    assert code == 0
    assert [line.split() for line in out.splitlines()] == printed.EPS3


def test_triangle_single_row(capsys):
    assert run(capsys, "triangle", "e", "--rows", "0") == (0, "1\n", "")


def test_triangle_csv_and_bfile(capsys):
    _, out, _ = run(capsys, "triangle", "lambda", "--p", "2", "--rows", "2", "--format", "csv")
    assert out == "1,0,0\n1,1,0\n1,1+q,1\n"
    _, out, _ = run(capsys, "triangle", "o", "--rows", "2", "--format", "bfile")
    assert oeis.parse_bfile(out).values == [0, 0, 1, 0, 1, 1]


@pytest.mark.parametrize(
    "argv",
    [
        ("triangle", "epsilon", "--rows", "3"),
        ("triangle", "e_mod_p", "--p", "3", "--j", "3"),
        ("triangle", "nope"),
        ("triangle", "epsilon", "--p", "3", "--format", "bfile"),
        ("verify", "bogus"),
        ("verify", "all", "--primes", "4"),
        ("series", "9.99"),
        ("oeis", "compare", "A12", "L", "--offline"),
        ("oeis", "export", "nope"),
        (),
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_verify_single(capsys):
    code, out, _ = run(capsys, "verify", "3.14", "--max-n", "12")
    assert code == 0
    assert out.splitlines()[0].startswith("3.14\tn<=12;")
    assert "\tpass\t" in out


def test_verify_failure_exit_1(capsys, monkeypatch):
    from losanitsch import identities

    def broken(c):
        yield "n=0", 0, 1

    monkeypatch.setitem(identities._BY_ID, "fake", identities.Check("fake", "false", broken, "deep"))
    code, out, _ = run(capsys, "verify", "fake", "--max-n", "4")
    assert code == 1
    assert "1 failed: fake" in out


def test_series(capsys):
    _, out, _ = run(capsys, "series", "3.11", "--terms", "4")
    assert out.split() == ["1", "1+x", "1+x+x^2", "1+2x+2x^2+x^3", "1+2x+4x^2+2x^3+x^4"]
    _, out, _ = run(capsys, "series", "2.5", "--terms", "2")
    assert out.split() == ["1", "1", "1+x"]
    _, out, _ = run(capsys, "series", "2.11", "--terms", "3", "--k", "0")
    assert out.split() == ["1", "1", "1", "1"]


def test_oeis_export(capsys):
    code, out, _ = run(capsys, "oeis", "export", "e", "--rows", "3")
    assert code == 0
    assert out.splitlines()[:3] == ["0 1", "1 1", "2 0"]
    assert len(out.splitlines()) == 10


def test_oeis_compare_file(capsys, tmp_path):
    # synthetic reference: our own export re-indexed from 1
    vals = oeis.SequenceView("L").values(12)
    path = tmp_path / "b999999.txt"
    path.write_text("# synthetic\n" + "".join(f"{i + 1} {v}\n" for i, v in enumerate(vals)))
    code, out, _ = run(capsys, "oeis", "compare", "A999999", "L", "--rows", "12", "--file", str(path))
    assert code == 0
    assert "i+1" in out
    path.write_text("".join(f"{i} {v + (i == 20)}\n" for i, v in enumerate(vals)))
    code, out, _ = run(capsys, "oeis", "compare", "A999999", "L", "--rows", "12", "--file", str(path))
    assert code == 1
    assert "mismatch at reference index 20" in out


def test_oeis_compare_uses_cache_offline(capsys, tmp_path):
    vals = oeis.SequenceView("f1").values(15)
    (tmp_path / "b999998.txt").write_text("".join(f"{i} {v}\n" for i, v in enumerate(vals)))
    code, out, _ = run(
        capsys, "oeis", "compare", "A999998", "f1", "--rows", "15",
        "--offline", "--cache-dir", str(tmp_path),
    )
    assert code == 0 and "match" in out


def test_oeis_compare_missing_cache_offline(capsys, tmp_path):
    code, _, err = run(capsys, "oeis", "compare", "A999997", "L", "--offline", "--cache-dir", str(tmp_path))
    assert code == 1 and "not cached" in err


def test_malformed_file_is_usage_error(capsys, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("0 1\n1 x\n")
    code, _, err = run(capsys, "oeis", "compare", "A999999", "L", "--file", str(path))
    assert code == 2 and "malformed" in err


def test_module_entry_point():
    r = subprocess.run(
        [sys.executable, "-m", "losanitsch", "triangle", "e", "--rows", "0"],
        capture_output=True, text=True, check=False,
    )
    assert r.returncode == 0 and r.stdout == "1\n"
