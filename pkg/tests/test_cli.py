import json
import math
import os

import pytest

from grandlp import cli


IND = '{"kind":"indicator","box":{"kind":"box","lo":[0],"hi":[1]}}'
UNIT = '{"kind":"box","lo":[0],"hi":[1]}'


def run(argv):
    return cli.main(argv)


def test_grand_norm_end_to_end(tmp_path):
    out = tmp_path / "gn.json"
    code = run(["grand-norm", "--input", IND, "--p", "2", "--theta1", "1",
                "--domain", UNIT, "--output", str(out)])
    assert code == 0
    data = json.loads(out.read_text())
    assert data["value"] == pytest.approx(1.0, abs=1e-6)
    assert data["argmax_eps"] == pytest.approx(1.0, abs=1e-3)
    assert data["schema_version"] == 1


def test_grand_norm_plot_artifacts(tmp_path):
    out = tmp_path / "gn.json"
    code = run(["grand-norm", "--input", IND, "--p", "2", "--theta1", "1",
                "--domain", UNIT, "--output", str(out), "--plot",
                "--eps-grid", "32"])
    assert code == 0
    csv_path = tmp_path / "gn.curve.csv"
    svg_path = tmp_path / "gn.curve.svg"
    assert csv_path.exists() and svg_path.exists()
    header = csv_path.read_text().splitlines()[0]
    assert header == "epsilon,phi,err_bound"
    assert svg_path.read_text().lstrip().startswith("<?xml")


def test_output_roundtrip_is_stable(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    args = ["grand-norm", "--input", IND, "--p", "2", "--theta1", "1",
            "--domain", UNIT, "--eps-grid", "16"]
    assert run(args + ["--output", str(a)]) == 0
    assert run(args + ["--output", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_missing_field_is_usage_error(capsys):
    code = run(["grand-norm", "--input", '{"kind":"gaussian"}', "--p", "2"])
    assert code == cli.EXIT_USAGE
    assert "missing field 'q'" in capsys.readouterr().err


def test_membership_failure_exit_code(tmp_path):
    code = run(["grand-norm", "--input", '{"kind":"power_decay","s":0.4}',
                "--p", "2", "--eps-grid", "8",
                "--output", str(tmp_path / "x.json")])
    assert code == cli.EXIT_MEMBERSHIP


def test_exp_abs_over_line_theta0(tmp_path):
    # closed form: sup_eps (2/(2-eps))^(1/(2-eps)) over (0,1]
    out = tmp_path / "e.json"
    code = run(["grand-norm", "--input", '{"kind":"exp_abs"}', "--p", "2",
                "--theta1", "0", "--output", str(out)])
    assert code == 0
    import numpy as np

    eps = np.linspace(1e-6, 1.0, 4096)
    oracle = float(np.max((2.0 / (2.0 - eps)) ** (1.0 / (2.0 - eps))))
    assert json.loads(out.read_text())["value"] == pytest.approx(oracle, rel=1e-5)


def test_curve_csv(tmp_path):
    out = tmp_path / "c.csv"
    code = run(["curve", "--input", IND, "--p", "2", "--theta1", "1",
                "--domain", UNIT, "--eps-grid", "16", "--output", str(out)])
    assert code == 0
    rows = out.read_text().splitlines()
    assert rows[0] == "epsilon,phi,err_bound"
    assert len(rows) == 17
    eps, phi, err = map(float, rows[1].split(","))
    assert phi == pytest.approx(eps, abs=1e-9)


def test_fourier_csv_and_analytic_echo(tmp_path, capsys):
    out = tmp_path / "f.csv"
    code = run(["fourier", "--input", '{"kind":"exp_abs"}',
                "--fft-n", "1024", "--output", str(out)])
    assert code == 0
    captured = capsys.readouterr()
    assert "1/(1+g^2)" in captured.out
    rows = out.read_text().splitlines()
    assert rows[0] == "gamma,re,im"
    assert len(rows) == 1025


def test_fourier_numeric_only_warns(capsys):
    code = run(["fourier", "--input", '{"kind":"power_decay","s":3}',
                "--fft-n", "256"])
    assert code == 0
    assert "unsupported" in capsys.readouterr().err


def test_ap_norm_command(tmp_path):
    out = tmp_path / "ap.json"
    code = run(["ap-norm", "--input", '{"kind":"gaussian","q":0.5}',
                "--p", "2", "--q", "2", "--theta1", "1", "--theta2", "1",
                "--grandizer", '{"kind":"power_decay","s":2}',
                "--weight", '{"kind":"power_decay","s":2}',
                "--eps-grid", "24", "--output", str(out)])
    assert code == 0
    data = json.loads(out.read_text())
    assert data["value"] == pytest.approx(data["time_part"] + data["freq_part"])


def test_verify_unknown_suite(capsys):
    code = run(["verify", "--suite", "bogus"])
    assert code == cli.EXIT_USAGE
    assert "norm-axioms" in capsys.readouterr().err


def test_verify_suite_writes_report(tmp_path):
    out = tmp_path / "rep.json"
    code = run(["verify", "--suite", "closure-limit", "--output", str(out)])
    assert code == 0
    data = json.loads(out.read_text())
    assert data["suite"] == "closure-limit"
    assert data["summary"]["fail"] == 0


def test_verify_table_format(capsys):
    code = run(["verify", "--suite", "theorem6-pair-inclusions",
                "--format", "table"])
    assert code == 0
    out = capsys.readouterr().out
    assert "summary:" in out and "[PASS]" in out


def test_prop5_command(tmp_path):
    out = tmp_path / "p5.json"
    code = run(["prop5", "--n-max", "3", "--output", str(out)])
    assert code == 0
    rows = json.loads(out.read_text())["rows"]
    assert len(rows) == 3
    assert rows[0]["norm"] == pytest.approx(0.14990571, abs=1e-5)


def test_bad_format_for_json_payload(capsys):
    code = run(["grand-norm", "--input", IND, "--p", "2", "--domain", UNIT,
                "--format", "csv", "--eps-grid", "16"])
    assert code == cli.EXIT_USAGE
