import json
import math
import os
import subprocess
import sys

import pytest

from hankel_spectra import cli


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out


def test_kernel_single_point_csv(capsys):
    code, out = run_cli(capsys, "kernel", "--ell", "0", "--x", "1.0")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "x,value,route,error_estimate"
    cells = lines[1].split(",")
    assert float(cells[0]) == 1.0
    assert float(cells[1]) == pytest.approx(2.0 / math.pi * math.sin(1.0), rel=1e-14)


def test_kernel_grid_json(capsys):
    code, out = run_cli(
        capsys, "kernel", "--ell", "2", "--xmin", "0.5", "--xmax", "2.0",
        "--num", "4", "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["command"] == "kernel"
    assert payload["ell"] == 2
    assert len(payload["rows"]) == 4
    assert payload["rows"][0]["x"] == 0.5
    assert payload["rows"][-1]["x"] == 2.0
    for row in payload["rows"]:
        assert row["route"] == "closed"
        assert math.isfinite(row["value"])


def test_kernel_rejects_bad_order(capsys):
    code, out = run_cli(capsys, "kernel", "--ell", "9", "--x", "1.0")
    assert code == 2


def test_kernel_rejects_empty_grid(capsys):
    code, _ = run_cli(capsys, "kernel", "--ell", "1", "--xmin", "2.0", "--xmax", "1.0", "--num", "4")
    assert code == 2


def test_density_row_values(capsys):
    code, out = run_cli(capsys, "density", "--p", "0.5", "--lambda", "1.0")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "lambda,rho,h"
    cells = [float(c) for c in lines[1].split(",")]
    assert cells[0] == 1.0
    assert cells[1] == pytest.approx(math.cosh(math.pi) / math.pi, rel=1e-13)
    assert cells[2] == pytest.approx(math.pi / math.cosh(math.pi), rel=1e-13)


def test_density_rejects_large_p(capsys):
    code, _ = run_cli(capsys, "density", "--p", "0.75", "--lambda", "1.0")
    assert code == 2


def test_spectrum_json_small(capsys):
    code, out = run_cli(capsys, "spectrum", "--ell", "0", "--size", "2", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    values = sorted(payload["eigenvalues"])
    assert values[0] == pytest.approx(-2.0 / (3.0 * math.pi), abs=1e-14)
    assert values[1] == pytest.approx(2.0 / math.pi, abs=1e-14)
    assert payload["backend"] in ("compiled", "python")
    assert payload["containment_violation"] == 0.0


def test_spectrum_csv_has_table_and_summary(capsys):
    code, out = run_cli(capsys, "spectrum", "--ell", "1", "--size", "8")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "index,eigenvalue"
    data_rows = [l for l in lines if l and l.split(",")[0].isdigit()]
    assert len(data_rows) == 8
    assert "containment_violation" in lines[-1]


def test_spectrum_out_file_atomic(tmp_path, capsys):
    target = tmp_path / "spectrum.csv"
    code, out = run_cli(
        capsys, "spectrum", "--ell", "0", "--size", "4", "--out", str(target)
    )
    assert code == 0
    summary = json.loads(out)
    assert summary["size"] == 4
    text = target.read_text()
    assert text.startswith("index,eigenvalue")
    assert len(text.strip().splitlines()) == 5
    leftovers = [n for n in os.listdir(tmp_path) if n.startswith(".partial-")]
    assert leftovers == []


def test_spectrum_rejects_oversized_request(capsys, monkeypatch):
    monkeypatch.setenv("HANKEL_SPECTRA_MAX_N", "16")
    code, _ = run_cli(capsys, "spectrum", "--ell", "0", "--size", "32")
    assert code == 2


def test_blocks_even_payload(capsys):
    code, out = run_cli(capsys, "blocks", "--ell", "4", "--size", "16")
    assert code == 0
    payload = json.loads(out)
    assert payload["parity"] == "even"
    assert payload["m"] == 2
    assert payload["max_abs_deviation"] <= 1e-13
    assert payload["cross_block_max"] == 0.0


def test_blocks_odd_payload(capsys):
    code, out = run_cli(capsys, "blocks", "--ell", "3", "--size", "16")
    assert code == 0
    payload = json.loads(out)
    assert payload["parity"] == "odd"
    assert payload["m"] == 1


def test_blocks_rejects_out_of_range_order(capsys):
    code, _ = run_cli(capsys, "blocks", "--ell", "9", "--size", "16")
    assert code == 2


@pytest.mark.parametrize(
    "suite", ["identities", "fourier", "kernels", "operators", "spectral"]
)
def test_verify_suites_pass(capsys, suite):
    code, out = run_cli(capsys, "verify", "--suite", suite)
    assert code == 0
    payload = json.loads(out)
    assert payload["all_pass"] is True
    assert payload["checks"]
    for check in payload["checks"]:
        assert check["pass"] is True
        assert "measured" in check and "threshold" in check


def test_verify_operators_at_tight_tolerance(capsys):
    code, out = run_cli(capsys, "verify", "--suite", "operators", "--tol", "1e-13")
    assert code == 0
    assert json.loads(out)["all_pass"] is True


def test_verify_unreachable_tolerance_fails(capsys):
    code, out = run_cli(capsys, "verify", "--suite", "fourier", "--tol", "1e-30")
    assert code == 1
    payload = json.loads(out)
    assert payload["all_pass"] is False
    assert any(not check["pass"] for check in payload["checks"])


def test_numerical_failure_maps_to_exit_three(capsys, monkeypatch):
    def explode(*args, **kwargs):
        raise ArithmeticError("synthetic loss of convergence")

    monkeypatch.setattr(cli.kernels, "evaluate", explode)
    code, _ = run_cli(capsys, "kernel", "--ell", "1", "--x", "1.0")
    assert code == 3


def test_output_is_byte_deterministic(capsys):
    _, first = run_cli(capsys, "kernel", "--ell", "3", "--xmin", "0.2", "--xmax", "9.0", "--num", "7")
    _, second = run_cli(capsys, "kernel", "--ell", "3", "--xmin", "0.2", "--xmax", "9.0", "--num", "7")
    assert first == second


def test_console_script_runs():
    result = subprocess.run(
        ["hankel-spectra", "density", "--p", "0.0", "--lambda", "4.0"],
        capture_output=True,
        text=True,
    )
    assert result.returncode == 0
    assert result.stdout.startswith("lambda,rho,h")


def test_console_script_bad_flag_exits_two():
    result = subprocess.run(
        ["hankel-spectra", "density", "--nonsense"], capture_output=True, text=True
    )
    assert result.returncode == 2
