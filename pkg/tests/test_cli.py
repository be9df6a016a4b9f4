import io
import json
import subprocess
import sys

import pytest

from heisenweyl.cli import main
from heisenweyl.report import VerificationReport


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


@pytest.mark.parametrize(
    "argv,expected",
    [
        (("normalize", "y*x", "--system", "hpq"), "q*x*y + z"),
        (("normalize", "x", "--system", "hpq"), "x"),
        (("normalize", "y*x^2", "--system", "hpq"), "q^2*x^2*y + (q + p^-1)*x*z"),
        (("normalize", "x^-1*x", "--system", "local"), "1"),
        (("mul", "y", "x"), "q*x*y + z"),
        (("commutator", "y", "x", "--lambda", "q"), "z"),
        (("commutator", "x", "x"), "0"),
        (("eval", "[4]_{p,q}", "--spec", "oneparam:1,1"), "t^3 + t + t^-1 + t^-3"),
        (("eval", "[12]_{p,q}", "--spec", "cyclotomic:12:4,3"), "0"),
        (("eval", "1", "--spec", "numeric:1.3,1.7"), "1"),
        (("normalize", "y*x", "--spec", "oneparam:2,3"), "t^3*x*y + z"),
    ],
)
def test_outputs(argv, expected):
    code, out = run(*argv)
    assert code == 0
    assert out == expected + "\n"


def test_gwa_systems():
    assert run("normalize", "y*x", "--system", "gwa:hpq") == (0, "c\n")
    code, out = run("normalize", "z*x - p^-1*x*z", "--system", "gwa:apq")
    assert (code, out) == (0, "0\n")
    code, out = run("normalize", "(y*x - p^-1*x*y)^2*z^3", "--system", "gwa:aprs:2,3")
    assert (code, out) == (0, "1\n")


@pytest.mark.parametrize(
    "argv",
    [
        ("normalize", "y*x +"),
        ("normalize", "w"),
        ("normalize", "y*x", "--system", "bogus"),
        ("normalize", "x^-1", "--system", "hpq"),
        ("eval", "1/(1-p*q)", "--spec", "numeric:1,1"),
        ("eval", "1", "--spec", "weird:1"),
        ("verify", "oscillator", "--mode", "oneparam:2,3"),
        ("verify", "nonsense"),
        ("verify", "fock", "--degree", "0"),
    ],
)
def test_usage_errors_exit_2(argv, capsys):
    code, _ = run(*argv)
    assert code == 2
    assert capsys.readouterr().err


def test_vanishing_denominator_names_factor(capsys):
    run("eval", "1/[12]_{p,q}", "--spec", "cyclotomic:12:4,3")
    assert "offending factor" in capsys.readouterr().err


def test_verify_exit_codes(tmp_path):
    assert run("verify", "identities", "--range", "30")[0] == 0
    code, out = run("verify", "diamond", "--pprime", "p")
    assert code == 1 and "z*y*x" in out
    assert run("verify", "center", "--mode", "oneparam:2,3")[0] == 0


def test_report_file_roundtrip(tmp_path):
    path = tmp_path / "report.jsonl"
    code, out = run("verify", "morphisms", "--report", str(path))
    assert code == 0
    lines = path.read_text(encoding="utf-8").splitlines()
    assert all(json.loads(line)["status"] == "pass" for line in lines)
    report = VerificationReport.from_jsonl(path.read_text(encoding="utf-8"))
    assert report.summary_line() in out


def test_output_is_deterministic():
    first = run("verify", "gwa", "-v")[1]
    second = run("verify", "gwa", "-v")[1]
    assert first == second
    assert "micros" not in first


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "heisenweyl", "normalize", "y*x"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout == "q*x*y + z\n"
