import json
import subprocess
import sys

import pytest

from dunkl import __version__
from dunkl.cli import main
from dunkl.poly import Polynomial


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_jack_zeta_text(capsys):
    code, out, _ = run(capsys, "jack", "zeta", "--d", "2", "--alpha", "1,0")
    assert code == 0
    assert out.strip() == "x1 + (k0/(k0+1))*x2"


def test_jack_norm_and_rational_kappa(capsys):
    _, out, _ = run(capsys, "jack", "norm", "--d", "3", "--alpha", "2,0,1")
    assert out.strip() == "(9*k0^3 + 27*k0^2 + 20*k0 + 4)/(2*k0 + 2)"
    _, out, _ = run(capsys, "jack", "zeta", "--d", "3", "--alpha", "2,0,1", "--kappa", "1/2")
    assert Polynomial.parse(out.strip(), 3) == Polynomial.parse(
        "x1^2*x3 + 7/18*x1*x2*x3 + 1/3*x1*x3^2 + 1/6*x2^2*x3 + 1/18*x2*x3^2", 3
    )


def test_roots_json(capsys):
    code, out, _ = run(capsys, "roots", "--type", "B3", "--json")
    data = json.loads(out)
    assert code == 0
    assert data["degrees"] == [2, 4, 6] and data["order"] == 48


def test_roots_degrees_only(capsys):
    code, out, _ = run(capsys, "roots", "--type", "H3")
    assert code == 0 and "degrees: [2, 6, 10]" in out


def test_apply_dunkl_json_round_trip(capsys):
    code, out, _ = run(capsys, "apply", "--type", "B2", "--op", "dunkl", "--poly", "x1^2*x2", "--i", "1", "--json")
    data = json.loads(out)
    assert code == 0
    assert Polynomial.from_json(data["result"]["poly"]) == Polynomial.parse("(2*k0+2)*x1*x2", 2)


def test_negative_kappa_and_singular_exit(capsys):
    code, _, err = run(capsys, "apply", "--type", "Z2", "--rank", "1", "--kappa", "-3/2", "--op", "v", "--poly", "x1^3")
    assert code == 1
    assert json.loads(err)["error"] == "singular_parameter"


def test_kernel_exact_and_numeric(capsys):
    _, out, _ = run(capsys, "kernel", "--type", "Z2", "--rank", "1", "--kappa", "1/2", "--degree", "2")
    assert out.strip() == "1/4*x1^2*x2^2"
    code, out, _ = run(capsys, "kernel", "--type", "Z2", "--rank", "1", "--kappa", "0.5", "--x", "0.7", "--y", "0.3", "--json")
    data = json.loads(out)
    from dunkl.numeric.kernel import z2_kernel_bessel

    assert code == 0
    assert abs(data["value"] - z2_kernel_bessel(0.5, 0.7, 0.3)) < 1e-10


def test_kernel_grid_csv(capsys, tmp_path):
    grid = tmp_path / "grid.csv"
    grid.write_text("x1,x2,y1,y2\n0.1,0.2,0.3,0.4\n-0.5,0.5,1.0,0.0\n")
    code, out, _ = run(capsys, "kernel", "--type", "B2", "--kappa", "0.5,1", "--grid", str(grid), "--format", "csv")
    lines = out.strip().splitlines()
    assert code == 0 and len(lines) == 3
    assert lines[0].startswith("x1,x2,y1,y2,value")


def test_kernel_symbolic_needs_values(capsys):
    code, _, err = run(capsys, "kernel", "--type", "A2", "--x", "1,0,0", "--y", "0,1,0")
    assert code == 1 and json.loads(err)["error"] == "numeric_mode_required"


def test_mm_numeric(capsys):
    from math import pi

    _, out, _ = run(capsys, "mm", "--type", "B2", "--kappa0", "1/2", "--kappa1", "1/2", "--numeric", "--json")
    assert abs(json.loads(out)["value"] - 4 / pi) < 1e-14


def test_harmonics_and_form(capsys):
    code, out, _ = run(capsys, "harmonics", "--group", "z2xz2", "--max-degree", "2")
    assert code == 0 and out.strip()
    code, out, _ = run(capsys, "form", "--type", "Z2", "--rank", "1", "--p", "x1^2", "--q", "x1^2")
    assert code == 0 and out.strip() == "4*k0 + 2"


def test_verify_suite_exit_code(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "census", "--seed", "7", "--json")
    assert code == 0 and json.loads(out)["ok"]


@pytest.mark.parametrize(
    "argv,code",
    [
        (["roots", "--type", "Q2"], 2),
        (["apply", "--type", "A2", "--op", "dunkl", "--poly", "x1^"], 2),
        (["jack", "zeta", "--d", "3", "--alpha", "1,-1,0"], 1),
    ],
)
def test_error_exit_codes(capsys, argv, code):
    got, out, err = run(capsys, *argv)
    assert got == code
    assert not out
    assert "error" in json.loads(err)


def test_usage_error_and_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "dunkl", "roots"], capture_output=True, text=True)
    assert r.returncode == 2
    r = subprocess.run([sys.executable, "-m", "dunkl", "version"], capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout.strip() == __version__
