import json

import numpy as np
import pytest

from squeezed_zeno.cli import main


def run(tmp_path, command, config=None, extra=None):
    args = [command]
    if config is not None:
        cfg = tmp_path / "config.json"
        cfg.write_text(json.dumps(config))
        args += ["--config", str(cfg)]
    args += extra or []
    return main(args)


class TestSurface:
    def test_grid_and_sidecar(self, tmp_path):
        out = tmp_path / "surface.csv"
        code = run(
            tmp_path,
            "surface",
            {"N": 1.0, "psi": 0.0, "n_theta": 64, "n_phi": 64},
            ["--out", str(out)],
        )
        assert code == 0
        lines = out.read_text().splitlines()
        assert lines[0] == "theta,phi,F"
        assert len(lines) == 1 + 64 * 64
        data = np.loadtxt(lines[1:], delimiter=",")
        # argmax row consistent with the closed-form maxima
        best = data[np.argmax(data[:, 2])]
        assert np.cos(best[0]) == pytest.approx(-1 / (2 * (1.5 + np.sqrt(2))), abs=0.05)
        assert min(abs(best[1] - np.pi / 2), abs(best[1] - 3 * np.pi / 2)) < 0.1
        sidecar = json.loads((tmp_path / "surface.csv.maxima.json").read_text())
        assert sidecar["phi1"] == pytest.approx(np.pi / 2)
        assert sidecar["cos_theta_max"] == pytest.approx(-0.17157287525, abs=1e-9)

    def test_vacuum_max_at_south_pole(self, tmp_path):
        out = tmp_path / "s.csv"
        code = run(
            tmp_path,
            "surface",
            {"N": 0.0, "n_theta": 33, "n_phi": 8},
            ["--out", str(out)],
        )
        assert code == 0
        data = np.loadtxt(out.read_text().splitlines()[1:], delimiter=",")
        best = data[np.argmax(data[:, 2])]
        assert best[0] == pytest.approx(np.pi)
        assert best[2] == pytest.approx(0.0, abs=1e-12)

    def test_unknown_key_rejected(self, tmp_path, capsys):
        code = run(tmp_path, "surface", {"N": 1.0, "bogus": 3})
        assert code == 2
        assert "bogus" in capsys.readouterr().err

    def test_malformed_config(self, tmp_path):
        cfg = tmp_path / "bad.json"
        cfg.write_text("{not json")
        assert main(["surface", "--config", str(cfg)]) == 2

    def test_unwritable_path(self, tmp_path):
        code = run(
            tmp_path,
            "surface",
            {"N": 1.0, "n_theta": 8, "n_phi": 8},
            ["--out", str(tmp_path / "missing_dir" / "x.csv")],
        )
        assert code == 4


class TestEvolve:
    def test_zeno_plus_frozen_column(self, tmp_path):
        out = tmp_path / "evolve.csv"
        code = run(
            tmp_path,
            "evolve",
            {"N": 1.0, "psi": 0.0, "state": "zeno-plus", "measure": "mu1",
             "t_end": 2.0, "n_steps": 20},
            ["--out", str(out)],
        )
        assert code == 0
        lines = out.read_text().splitlines()
        assert lines[0] == "t,sigma_mu_free,sigma_mu_measured"
        data = np.loadtxt(lines[1:], delimiter=",")
        assert np.max(np.abs(data[:, 2] - 1.0)) < 1e-10
        # the free column decays away from 1
        assert data[-1, 1] < 1.0 - 0.05

    def test_zeno_minus_exponential(self, tmp_path):
        out = tmp_path / "evolve.csv"
        code = run(
            tmp_path,
            "evolve",
            {"N": 1.0, "psi": 0.0, "state": "zeno-minus", "measure": "mu1",
             "t_end": 5.0, "n_steps": 50},
            ["--out", str(out)],
        )
        assert code == 0
        data = np.loadtxt(out.read_text().splitlines()[1:], delimiter=",")
        alpha = 2 * (1.5 - np.sqrt(2))
        expected = 1 - 2 * np.exp(-alpha * data[:, 0])
        assert np.max(np.abs(data[:, 2] - expected)) < 1e-8

    def test_vacuum_z_measurement_matches_free(self, tmp_path):
        out = tmp_path / "evolve.csv"
        code = run(
            tmp_path,
            "evolve",
            {"N": 0.0, "M": 0.0, "state": "excited", "measure": "-z",
             "t_end": 3.0, "n_steps": 30},
            ["--out", str(out)],
        )
        assert code == 0
        data = np.loadtxt(out.read_text().splitlines()[1:], delimiter=",")
        assert np.max(np.abs(data[:, 1] - data[:, 2])) < 1e-8

    def test_inconsistent_observable_rejected(self, tmp_path):
        code = run(
            tmp_path,
            "evolve",
            {"N": 1.0, "state": "zeno-plus", "measure": "mu1", "observable": "z"},
        )
        assert code == 2

    def test_json_format(self, tmp_path):
        out = tmp_path / "evolve.json"
        code = run(
            tmp_path,
            "evolve",
            {"N": 1.0, "state": "excited", "measure": "none",
             "t_end": 1.0, "n_steps": 5, "format": "json"},
            ["--out", str(out)],
        )
        assert code == 0
        payload = json.loads(out.read_text())
        assert payload["columns"] == ["t", "sigma_mu_free"]
        assert len(payload["rows"]) == 6


class TestZeno:
    def test_zeno_plus_second_order_deficit(self, tmp_path):
        out = tmp_path / "zeno.csv"
        code = run(
            tmp_path,
            "zeno",
            {"N": 1.0, "psi": 0.0, "state": "zeno-plus", "dt": 0.01, "count": 200},
            ["--out", str(out)],
        )
        assert code == 0
        lines = out.read_text().splitlines()
        assert lines[0] == "t,P_exact,P_first_order,P_second_order"
        data = np.loadtxt(lines[1:], delimiter=",")
        assert np.all(data[:, 1] > 0.995)
        # exact curve tracks the second-order law, not the (flat) first-order one
        assert np.max(np.abs(data[:, 1] - data[:, 3])) < 1e-4

    def test_excited_vacuum_first_order(self, tmp_path):
        out = tmp_path / "zeno.csv"
        code = run(
            tmp_path,
            "zeno",
            {"N": 0.0, "M": 0.0, "state": "excited", "dt": 0.001, "count": 1000},
            ["--out", str(out)],
        )
        assert code == 0
        data = np.loadtxt(out.read_text().splitlines()[1:], delimiter=",")
        assert data[-1, 1] == pytest.approx(np.exp(-1.0), rel=0.01)
        assert np.all(np.isnan(data[:, 3]))

    def test_monte_carlo_deterministic(self, tmp_path):
        config = {"N": 1.0, "state": "zeno-plus", "dt": 0.02, "count": 50,
                  "n_traj": 2000, "seed": 5}
        out1, out2 = tmp_path / "a.csv", tmp_path / "b.csv"
        assert run(tmp_path, "zeno", config, ["--out", str(out1)]) == 0
        assert run(tmp_path, "zeno", config, ["--out", str(out2)]) == 0
        assert out1.read_bytes() == out2.read_bytes()
        header = out1.read_text().splitlines()[0]
        assert header.endswith("P_mc,P_mc_stderr")


class TestIntelligent:
    def test_report_n1(self, tmp_path):
        out = tmp_path / "report.json"
        code = run(tmp_path, "intelligent", {"N": 1.0, "psi": 0.0}, ["--out", str(out)])
        assert code == 0
        report = json.loads(out.read_text())
        assert not report["degenerate"]
        assert report["lambda_plus"][1] == pytest.approx(2**0.25, abs=1e-12)
        for branch in ("plus", "minus"):
            assert abs(report["uncertainty"][branch]["saturation_gap"]) < 1e-12
        assert report["factorization_residual"] < 1e-12

    def test_degenerate_vacuum(self, tmp_path):
        out = tmp_path / "report.json"
        code = run(tmp_path, "intelligent", {"N": 0.0, "M": 0.0}, ["--out", str(out)])
        assert code == 0
        report = json.loads(out.read_text())
        assert report["degenerate"]
        assert "warning" in report

    def test_eigenvalues_n2(self, tmp_path):
        out = tmp_path / "report.json"
        code = run(tmp_path, "intelligent", {"N": 2.0, "psi": 1.3}, ["--out", str(out)])
        assert code == 0
        report = json.loads(out.read_text())
        m = np.sqrt(6.0)
        target = 1j * np.sqrt(m) * np.exp(1j * 0.65)
        lam = complex(*report["lambda_plus"])
        assert lam == pytest.approx(target, abs=1e-12)


class TestOverridesAndDeterminism:
    def test_set_overrides(self, tmp_path):
        out = tmp_path / "surface.csv"
        code = run(
            tmp_path,
            "surface",
            {"N": 1.0, "n_theta": 64, "n_phi": 64},
            ["--set", "n_theta=8", "--set", "n_phi=8", "--out", str(out)],
        )
        assert code == 0
        assert len(out.read_text().splitlines()) == 1 + 8 * 8

    def test_byte_identical_reruns(self, tmp_path):
        config = {"N": 1.0, "psi": 0.0, "n_theta": 16, "n_phi": 16}
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        assert run(tmp_path, "surface", config, ["--out", str(a)]) == 0
        assert run(tmp_path, "surface", config, ["--out", str(b)]) == 0
        assert a.read_bytes() == b.read_bytes()

    def test_bad_format_rejected(self, tmp_path):
        code = run(tmp_path, "surface", {"N": 1.0, "format": "xml"})
        assert code == 2
