#!/usr/bin/env python3
#
# Copyright 2026 solitonlab contributors. Licensed under MIT License.
#

import pytest
import yaml

from solitonlab.cli import exit_code, main
from solitonlab.exception import (
    AssertionFailedError,
    BlowUpError,
    ConfigError,
    NoEigenvalueError,
)
from solitonlab.utility import digest, read_json


def _report(output):
    return read_json(output / "report.json")


class TestExitCode:
    @pytest.mark.parametrize(
        "error, code",
        [
            (ConfigError("bad", key="n"), 2),
            (AssertionFailedError(failures=["parseval"]), 1),
            (BlowUpError(time=0.5, sup_norm=1e7), 1),
            (NoEigenvalueError("none"), 1),
        ],
    )
    def test_distributor(self, error, code):
        assert exit_code(error) == code


class TestMain:
    def test_bootstrap(self, tmp_path):
        output = tmp_path / "out"
        assert main(["run", "bootstrap", "n=3", "kappa=9/5", "--output", str(output)]) == 0

        report = _report(output)
        assert report["passed"] is True
        assert report["results"]["states"] == ["6", "10"]
        assert report["results"]["status"] == "DONE"
        assert report["config"]["arguments"] == {"n": 3, "kappa": "9/5", "max_iter": 64}
        assert report["config_hash"] == digest(report["config"])
        assert set(report["versions"]) >= {"solitonlab", "numpy", "scipy", "pyarrow"}
        assert report["artifacts"] == ["trace.json"]
        assert read_json(output / "timing.json")["wall_time"] >= 0

    def test_shortcut(self, tmp_path):
        first, second = tmp_path / "first", tmp_path / "second"
        assert main(["run", "bootstrap", "n=3", "kappa=9/5", "--output", str(first)]) == 0
        arguments = ["bootstrap", "--n", "3", "--kappa", "9/5", "--output", str(second)]
        assert main(arguments) == 0
        assert (first / "report.json").read_bytes() == (second / "report.json").read_bytes()

    def test_deterministic(self, tmp_path):
        outputs = [tmp_path / name for name in ("a", "b", "c")]
        for output, seed in zip(outputs, ("5", "5", "6")):
            arguments = ["titchmarsh", "pairs=10", "--seed", seed, "--output", str(output)]
            assert main(arguments) == 0

        first, second = (output / "report.json" for output in outputs[:2])
        assert first.read_bytes() == second.read_bytes()
        assert _report(outputs[0])["config_hash"] != _report(outputs[2])["config_hash"]

    def test_config_file(self, tmp_path):
        path = tmp_path / "run.yaml"
        path.write_text(
            yaml.safe_dump(
                {"pipeline": "bootstrap", "format": "csv", "bootstrap": {"n": 3, "kappa": "9/5"}}
            ),
            encoding="utf-8",
        )
        output = tmp_path / "out"
        assert main(["run", "bootstrap", "--config", str(path), "--output", str(output)]) == 0
        assert (output / "trace.csv").is_file()

        # max_iter=1 stops the run before it is done
        arguments = ["bootstrap", "max_iter=1", "--config", str(path), "--output", str(output)]
        assert main(arguments) == 1
        assert _report(output)["failures"] == ["terminated", "admissible_done"]

    @pytest.mark.parametrize(
        "arguments",
        [
            ["run", "bootstrap", "n=3"],
            ["run", "bootstrap", "n=3", "kappa=1.8"],
            ["run", "bootstrap", "n=3", "kappa=9/5", "foo=1"],
            ["run", "bootstrap", "n=3", "kappa"],
            ["evolve", "--model", "kdv"],
            ["residual", "--wave-bundle", "missing"],
        ],
    )
    def test_usage_errors(self, tmp_path, arguments):
        output = tmp_path / "out"
        assert main(arguments + ["--output", str(output)]) == 2
        assert not output.exists()

    def test_malformed_config(self, tmp_path):
        path = tmp_path / "run.yaml"
        path.write_text("bootstrap: [n: 3\n", encoding="utf-8")
        output = tmp_path / "out"
        assert main(["run", "bootstrap", "--config", str(path), "--output", str(output)]) == 2
        assert not output.exists()

    def test_unknown_pipeline(self):
        with pytest.raises(SystemExit) as info:
            main(["run", "kdv"])
        assert info.value.code == 2

    def test_failed_assertion(self, tmp_path):
        output = tmp_path / "out"
        assert main(["certificate", "A=[1]", "--output", str(output)]) == 1
        report = _report(output)
        assert report["passed"] is False
        assert report["failures"] == ["degree_condition"]

    def test_numerical_error(self, tmp_path):
        output = tmp_path / "out"
        arguments = ["evolve", "initial=plane-wave", "amplitude=2", "blow_up_limit=1"]
        assert main(arguments + ["--output", str(output)]) == 1
        report = _report(output)
        assert report["error"]["type"] == "BlowUpError"
        assert report["passed"] is False

    @pytest.mark.slow
    def test_full_pipeline(self, tmp_path):
        output = tmp_path / "full"
        assert main(["residual", "--output", str(output)]) == 0
        report = _report(output)
        assert (output / "bundle" / "wave.json").is_file()
        assert report["passed"] is True
        assert report["results"]["residual"]["extended"] is False

        reloaded = tmp_path / "reloaded"
        bundle = str(output / "bundle")
        assert main(["residual", "--wave-bundle", bundle, "--output", str(reloaded)]) == 0
        residual = _report(reloaded)["results"]["residual"]
        assert residual["max_l2"] == pytest.approx(report["results"]["residual"]["max_l2"])
