"""Tests for the command-line entry point."""

# stdlib
import json
from unittest.mock import patch

# third party
import pytest

# local
from augmoments import __version__
from augmoments.main import EXIT_RUNTIME, EXIT_USAGE, build_experiment, build_parser, main, run


@pytest.fixture(autouse=True)
def workdir(tmp_path, monkeypatch):
    """Run every CLI test from an empty directory."""
    monkeypatch.chdir(tmp_path)
    monkeypatch.delenv("AUGMOMENTS_MNIST_DIR", raising=False)
    return tmp_path


class TestParser:
    """Tests for argument parsing and layering."""

    def test_flags_map_to_config_fields(self):
        """Dashed flags land on RunConfig field names."""
        args = build_parser().parse_args(
            ["mc-converge", "--kind", "translation", "--n-grid", "10,100", "--panel-nodes", "4", "--no-align"]
        )
        experiment = build_experiment(args)

        assert experiment.config.n_grid == [10, 100]
        assert experiment.config.panel_nodes == 4
        assert experiment.config.aligned is False

    def test_unset_flags_keep_preset_values(self):
        """A preset fills the fields no flag sets; explicit flags win."""
        args = build_parser().parse_args(["rank-sweep", "--preset", "rotation-rank-sweep", "--grid", "8x8"])
        experiment = build_experiment(args)

        assert experiment.config.grid == "8x8"
        assert experiment.config.amplitudes == [float(a) for a in range(16)]
        assert experiment.config.output == "rotation-rank-sweep.csv"

    def test_augmentation_modes(self):
        """--n-aug mixes counts and exact mode names."""
        args = build_parser().parse_args(["train-linear", "--n-aug", "1,50,analytic,closed_form"])

        assert build_experiment(args).config.n_aug == [1, 50, "analytic", "closed_form"]


class TestRun:
    """Tests for run() exit codes and side effects."""

    def test_rank_sweep(self, workdir):
        """A zero-amplitude sweep writes the all-zero row and a manifest."""
        status = run(["rank-sweep", "--kind", "rotation", "--amplitudes", "0", "--grid", "8x8", "--out", "r.csv"])

        assert status == 0
        assert (workdir / "r.csv").read_text(encoding="utf-8") == "amplitude,rank,lambda_max,trace\n0,0,0,0\n"
        assert (workdir / "r.manifest.json").exists()

    def test_replay(self, workdir):
        """Replaying a manifest writes the same output again."""
        run(["rank-sweep", "--kind", "rotation", "--amplitudes", "0", "--grid", "8x8", "--out", "r.csv"])
        first = (workdir / "r.csv").read_bytes()
        (workdir / "r.csv").unlink()

        assert run(["replay", "r.manifest.json"]) == 0
        assert (workdir / "r.csv").read_bytes() == first

    def test_list_presets(self, capsys):
        """--list-presets prints the packaged presets."""
        assert run(["--list-presets"]) == 0
        assert "translation-blur" in capsys.readouterr().out

    def test_version(self, capsys):
        """--version prints the version and exits 0."""
        assert run(["--version"]) == 0
        assert __version__ in capsys.readouterr().out

    def test_no_command(self, capsys):
        """A bare invocation is a usage error."""
        assert run([]) == EXIT_USAGE
        assert "command is required" in capsys.readouterr().err

    def test_unknown_flag(self, capsys):
        """Unknown flags are usage errors, not argparse exits."""
        assert run(["variance-map", "--bogus"]) == EXIT_USAGE
        assert capsys.readouterr().err.startswith("augmoments: ")

    def test_unknown_preset(self, capsys):
        """Unknown presets exit 2 and point at --list-presets."""
        assert run(["eigvecs", "--preset", "missing"]) == EXIT_USAGE
        assert "--list-presets" in capsys.readouterr().err

    def test_invalid_value(self, capsys):
        """Validation failures name the offending field."""
        assert run(["eigvecs", "--nodes", "0"]) == EXIT_USAGE
        assert "nodes" in capsys.readouterr().err

    def test_missing_required_flag(self, workdir, capsys):
        """A subcommand run without one of its required flags is a usage error and writes nothing."""
        status = run(["expected-image", "--out", "mean.pgm", "--grid", "8x8"])

        assert status == EXIT_USAGE
        assert "needs --kind" in capsys.readouterr().err
        assert not (workdir / "mean.pgm").exists()

    def test_runtime_error(self, workdir, capsys):
        """Failing commands exit 1 with a one-line summary and leave no output."""
        argv = ["expected-image", "--kind", "rotation", "--dist", "unif(-5,5)", "--analytic", "--out", "mean.pgm"]
        status = run(argv + ["--grid", "8x8"])

        assert status == EXIT_RUNTIME
        assert "UnsupportedOperationError" in capsys.readouterr().err
        assert not (workdir / "mean.pgm").exists()

    def test_bad_distribution(self, capsys):
        """Malformed distribution literals are runtime argument errors."""
        status = run(["variance-map", "--kind", "rotation", "--dist", "unif(1,", "--out", "v.pgm", "--grid", "8x8"])

        assert status == EXIT_RUNTIME
        assert "unexpected end" in capsys.readouterr().err

    def test_keyboard_interrupt(self, capsys):
        """Ctrl-C exits 1."""
        with patch("augmoments.main.build_experiment", side_effect=KeyboardInterrupt):
            assert run(["eigvecs"]) == EXIT_RUNTIME
        assert "Interrupted" in capsys.readouterr().err

    def test_manifest_content(self, workdir):
        """The manifest of a CLI run carries the explicit flags."""
        run(["rank-sweep", "--kind", "rotation", "--amplitudes", "0", "--grid", "8x8", "--out", "r.csv", "--seed", "6"])
        data = json.loads((workdir / "r.manifest.json").read_text(encoding="utf-8"))

        assert data["config"]["seed"] == 6
        assert data["config"]["amplitudes"] == [0.0]


class TestMain:
    def test_exit_status(self):
        """main() exits with run()'s status."""
        with patch("augmoments.main.run", return_value=EXIT_USAGE), pytest.raises(SystemExit) as exc_info:
            main()

        assert exc_info.value.code == EXIT_USAGE
