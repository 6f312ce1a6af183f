"""End-to-end runs of the command-line interface."""

import json
import math

import numpy as np
import pytest

from fourierjacobi.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


class TestCoeffs:
    def test_csv_output(self, capsys):
        code, out = run(capsys, "coeffs", "--alpha", "-0.5", "--beta", "-0.5",
                        "--kmax", "4", "--function", "cospoly:0,1")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "k,value"
        assert len(lines) == 6
        values = [float(line.split(",")[1]) for line in lines[1:]]
        np.testing.assert_allclose(values[1], math.pi / 2, rtol=1e-10)
        assert abs(values[3]) < 1e-12

    def test_json_round_trip(self, capsys, tmp_path):
        out_path = tmp_path / "series.json"
        code, _ = run(capsys, "coeffs", "--alpha", "0.5", "--beta", "0",
                      "--kmax", "8", "--function", "step:1.0,2.0",
                      "--format", "json", "--out", str(out_path))
        assert code == 0
        doc = json.loads(out_path.read_text())
        assert doc["alpha"] == 0.5 and doc["kmax"] == 8
        assert len(doc["values"]) == 9

        code, out = run(capsys, "coeffs", "--alpha", "0.5", "--beta", "0",
                        "--kmax", "8", "--function", "step:1.0,2.0")
        csv_values = [float(line.split(",")[1])
                      for line in out.strip().splitlines()[1:]]
        np.testing.assert_array_equal(csv_values, doc["values"])

    def test_deterministic(self, capsys):
        args = ("coeffs", "--alpha", "0.25", "--beta", "-0.25",
                "--kmax", "16", "--function", "step:0.8,1.9")
        _, first = run(capsys, *args)
        _, second = run(capsys, *args)
        assert first == second


class TestDecayAndCounterexample:
    def test_decay_chebyshev_step(self, capsys):
        code, out = run(capsys, "decay", "--alpha", "-0.5", "--beta", "-0.5",
                        "--function", "step:1.0472,1.5708",
                        "--kmax", "512")
        assert code == 0
        assert "slope" in out and "window" in out

    def test_counterexample_passes(self, capsys):
        code, out = run(capsys, "counterexample", "--alpha", "0",
                        "--beta", "-0.5", "--rho", "-0.3", "--kmax", "1024")
        assert code == 0
        predicted = float(out.splitlines()[0].rsplit(" ", 1)[1])
        np.testing.assert_allclose(predicted, -0.9, atol=1e-12)

    def test_counterexample_tol_gate(self, capsys):
        code, out = run(capsys, "counterexample", "--alpha", "0",
                        "--beta", "-0.5", "--rho", "-0.3", "--kmax", "1024",
                        "--tol", "1e-6")
        assert code == 1
        assert "FAIL" in out

    def test_opnorm_reports(self, capsys):
        code, out = run(capsys, "opnorm", "--alpha", "1", "--beta", "0",
                        "--region", "right")
        assert code == 0
        assert "slope" in out


class TestVerifyMehler:
    def test_small_sweep_passes(self, capsys):
        code, out = run(capsys, "verify-mehler", "--kmax", "8")
        assert code == 0
        assert "singular form" in out and "limit form" in out

    def test_unreachable_tolerance_fails(self, capsys):
        code, out = run(capsys, "verify-mehler", "--kmax", "4",
                        "--tol", "1e-18")
        assert code == 1
        assert "FAIL" in out


class TestLaguerre:
    def test_coeffs_csv(self, capsys):
        code, out = run(capsys, "laguerre", "coeffs", "--alpha", "0",
                        "--kmax", "4", "--function", "step:1.0")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "k,value"
        values = [float(line.split(",")[1]) for line in lines[1:]]
        np.testing.assert_allclose(values[1], math.exp(-1.0), rtol=1e-10)

    def test_identity_gate(self, capsys):
        code, out = run(capsys, "laguerre", "identity", "--alpha", "0.5",
                        "--kmax", "20", "--a", "2.5")
        assert code == 0
        assert "identity deviation" in out

    def test_bound_gate(self, capsys):
        code, out = run(capsys, "laguerre", "bound", "--alpha", "1.0",
                        "--kmax", "60")
        assert code == 0
        assert "sup |e^(-x/2) R_k|" in out


class TestTransform:
    def test_chebyshev_rows_match_closed_form(self, capsys):
        code, out = run(capsys, "transform", "--alpha", "-0.5",
                        "--beta", "-0.5", "--function", "indicator:1,2",
                        "--tau-min", "0.5", "--tau-max", "4.5",
                        "--tau-count", "5")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "tau,value"
        scale = math.sqrt(2.0 / math.pi)
        for line in lines[1:]:
            tau, value = (float(s) for s in line.split(","))
            want = scale * (math.sin(2 * tau) - math.sin(tau)) / tau
            np.testing.assert_allclose(value, want, rtol=1e-8, atol=1e-12)

    def test_expdecay_runs(self, capsys):
        code, out = run(capsys, "transform", "--alpha", "0", "--beta", "0",
                        "--function", "expdecay:4.0:1.0",
                        "--tau-max", "3.0", "--tau-count", "4")
        assert code == 0
        assert len(out.strip().splitlines()) == 5


class TestErrors:
    def test_bad_function_spec(self, capsys):
        code, out = run(capsys, "coeffs", "--alpha", "0", "--beta", "0",
                        "--kmax", "4", "--function", "wavelet:1.0")
        assert code == 2

    def test_bad_parameter_domain(self, capsys):
        code, _ = run(capsys, "coeffs", "--alpha", "-1.5", "--beta", "0",
                      "--kmax", "4", "--function", "step:1.0,2.0")
        assert code == 2

    def test_argparse_usage_error(self):
        with pytest.raises(SystemExit) as exc:
            main(["coeffs", "--alpha", "0"])
        assert exc.value.code == 2

    def test_unknown_subcommand(self):
        with pytest.raises(SystemExit) as exc:
            main(["frobnicate"])
        assert exc.value.code == 2


class TestSelftest:
    def test_single_criterion(self, capsys):
        code, out = run(capsys, "selftest", "--only", "fit-sanity")
        assert code == 0
        assert out.startswith("PASS fit-sanity")
        assert "1/1 criteria passed" in out
