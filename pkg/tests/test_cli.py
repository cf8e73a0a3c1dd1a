"""CLI subcommands: artifacts, exit codes, reproducibility."""

import json

import pytest
import yaml

from crediteq.cli import main
from crediteq.config import load_preset


def run(args):
    return main(args)


def small(extra=None):
    base = ["--preset", "case-a", "--samples", "200"]
    return base + (extra or [])


class TestSolve:
    def test_writes_report_and_curves(self, tmp_path):
        code = run(["solve", *small(), "--out", str(tmp_path)])
        assert code == 0
        report = json.loads((tmp_path / "report.json").read_text())
        assert report["verdict"] in ("equilibrium", "no-equilibrium")
        assert report["r_min"] is not None
        assert report["manifest"]["n"] == 200
        curves = (tmp_path / "curves.csv").read_text().splitlines()
        assert curves[0] == "r,pd,tau,rbar"
        assert len(curves) == 1 + 200  # header + curve_points
        assert curves[-1].count(",") == 3
        manifest = json.loads((tmp_path / "manifest.json").read_text())
        assert manifest["command"] == "solve"
        assert manifest["config_sha256"]

    def test_rerun_is_byte_identical(self, tmp_path):
        a, b = tmp_path / "a", tmp_path / "b"
        assert run(["solve", *small(), "--out", str(a)]) == 0
        assert run(["solve", *small(), "--out", str(b)]) == 0
        assert (a / "curves.csv").read_bytes() == (b / "curves.csv").read_bytes()
        assert (a / "report.json").read_bytes() == (b / "report.json").read_bytes()

    def test_rerun_from_manifest_matches(self, tmp_path):
        a, b = tmp_path / "a", tmp_path / "b"
        assert run(["solve", *small(), "--out", str(a)]) == 0
        assert run(["solve", "--config", str(a / "manifest.json"), "--out", str(b)]) == 0
        assert (a / "curves.csv").read_bytes() == (b / "curves.csv").read_bytes()

    def test_seed_override_changes_numbers(self, tmp_path):
        a, b = tmp_path / "a", tmp_path / "b"
        run(["solve", *small(), "--out", str(a)])
        run(["solve", *small(["--seed", "999"]), "--out", str(b)])
        assert (a / "curves.csv").read_bytes() != (b / "curves.csv").read_bytes()


class TestErrors:
    def test_invalid_config_exit_2(self, tmp_path, capsys):
        cfg = load_preset("case-a").to_dict()
        cfg["plan"]["noise"]["rev"]["variance"] = -1.0
        bad = tmp_path / "bad.yaml"
        bad.write_text(yaml.safe_dump(cfg))
        code = run(["solve", "--config", str(bad), "--out", str(tmp_path)])
        assert code == 2
        assert "plan.noise.rev.variance" in capsys.readouterr().err

    def test_missing_scenario_exit_2(self, tmp_path):
        assert run(["solve", "--out", str(tmp_path)]) == 2

    def test_both_config_and_preset_exit_2(self, tmp_path):
        assert run(["solve", "--preset", "case-a", "--config", "x.yaml",
                    "--out", str(tmp_path)]) == 2


class TestCurvesCommand:
    def test_csv_number_format(self, tmp_path):
        assert run(["curves", *small(), "--out", str(tmp_path)]) == 0
        body = (tmp_path / "curves.csv").read_text()
        assert body.endswith("\n")
        first_rate = body.splitlines()[1].split(",")[0]
        assert first_rate == "0.001"

    def test_dump_fcf(self, tmp_path):
        assert run(["curves", *small(["--dump-fcf"]), "--out", str(tmp_path)]) == 0
        rows = (tmp_path / "fcf_paths.csv").read_text().splitlines()
        assert len(rows) == 1 + 200
        assert rows[0].startswith("t1,t2,")


class TestCompare:
    def test_maturity_variant_deltas(self, tmp_path):
        code = run(["compare", *small(["--to-maturity", "5"]), "--out", str(tmp_path)])
        assert code == 0
        payload = json.loads((tmp_path / "compare.json").read_text())
        assert payload["deltas"]["r_min"] is not None
        assert payload["base"]["manifest"]["seed"] == payload["variant"]["manifest"]["seed"]

    def test_identical_variant_rejected(self, tmp_path):
        assert run(["compare", *small(), "--out", str(tmp_path)]) == 2


class TestMaxDebt:
    def test_maxdebt_artifacts(self, tmp_path):
        code = run(["maxdebt", *small(), "--out", str(tmp_path)])
        assert code == 0
        payload = json.loads((tmp_path / "maxdebt.json").read_text())
        assert payload["max_debt"] > 2000.0
        assert payload["bounded"] is True


class TestEnvOutputDir:
    def test_env_var_used(self, tmp_path, monkeypatch):
        monkeypatch.setenv("CREDITEQ_OUTPUT_DIR", str(tmp_path / "envout"))
        assert run(["curves", *small()]) == 0
        assert (tmp_path / "envout" / "curves.csv").exists()
