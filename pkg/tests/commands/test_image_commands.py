"""Tests for the commands that write images and operators."""

# third party
import numpy as np
import pytest

# local
from augmoments.dataio import read_pgm, read_tensor, synth_square
from augmoments.errors import ArgumentError, RangeError, UnsupportedOperationError
from augmoments.models.grid import Grid

TRANSLATION = "prod(unif(-0.1,0.1),unif(-0.1,0.1))"


class TestExpectedImageCommand:
    """Tests for expected-image."""

    def test_point_mass_returns_input(self, run_command, tmp_path):
        """A point mass at the identity reproduces the fixture up to 8-bit quantization."""
        run_command("expected-image", "mean.pgm", kind="rotation", dist="dirac(0)", grid="8x8", fixture="square")

        result = read_pgm(tmp_path / "mean.pgm")
        assert result.grid == Grid.square(8)
        np.testing.assert_allclose(result.data, synth_square(Grid.square(8)).data, atol=0.5 / 255)

    def test_analytic_matches_quadrature(self, run_command, tmp_path):
        """The closed form and the kink-aligned rule agree to one gray level."""
        run_command("expected-image", "quad.pgm", kind="translation", dist=TRANSLATION, grid="8x8")
        run_command("expected-image", "exact.pgm", kind="translation", dist=TRANSLATION, grid="8x8", analytic=True)

        quad, exact = read_pgm(tmp_path / "quad.pgm"), read_pgm(tmp_path / "exact.pgm")
        np.testing.assert_allclose(quad.data, exact.data, atol=1 / 255 + 1e-12)

    def test_amtf_output(self, run_command, tmp_path):
        """An .amtf output stores the raw image as a H x W tensor."""
        run_command("expected-image", "mean.amtf", kind="shear-horizontal", dist="unif(-0.2,0.2)", grid="6x8")

        assert read_tensor(tmp_path / "mean.amtf").shape == (6, 8)

    def test_manifest_written(self, run_command, tmp_path):
        """A successful run leaves a manifest beside its output."""
        experiment = run_command("expected-image", "mean.pgm", kind="zoom", dist="unif(0.9,1.1)", grid="8x8")

        assert (tmp_path / "mean.manifest.json").exists()
        assert experiment.outputs == [tmp_path / "mean.pgm"]

    def test_analytic_without_closed_form(self, run_command, tmp_path):
        """Rotation has no closed form, and the failed run leaves no output behind."""
        with pytest.raises(UnsupportedOperationError):
            run_command("expected-image", "mean.pgm", kind="rotation", dist="unif(-5,5)", grid="8x8", analytic=True)

        assert not (tmp_path / "mean.pgm").exists()
        assert not (tmp_path / "mean.manifest.json").exists()

    def test_missing_distribution(self, run_command):
        """--dist is required."""
        with pytest.raises(ArgumentError, match="--dist"):
            run_command("expected-image", "mean.pgm", kind="translation", grid="8x8")

    def test_unknown_suffix(self, run_command):
        """Images go to .pgm or .amtf only."""
        with pytest.raises(ArgumentError, match=".pgm or .amtf"):
            run_command("expected-image", "mean.png", kind="translation", dist=TRANSLATION, grid="8x8")


class TestExpectedOperatorCommand:
    """Tests for expected-operator."""

    def test_point_mass_is_identity(self, run_command, tmp_path):
        """E[M] of a point mass at the identity is the identity matrix."""
        run_command("expected-operator", "op.amtf", kind="rotation", dist="dirac(0)", grid="5x5")

        np.testing.assert_allclose(read_tensor(tmp_path / "op.amtf"), np.eye(25), atol=1e-12)

    def test_rows_sum_to_at_most_one(self, run_command, tmp_path):
        """Rows are convex weights, short of one where content leaves the grid."""
        run_command("expected-operator", "op.amtf", kind="translation", dist=TRANSLATION, grid="6x6")

        matrix = read_tensor(tmp_path / "op.amtf")
        assert matrix.shape == (36, 36)
        assert matrix.min() >= -1e-12
        assert matrix.sum(axis=1).max() <= 1 + 1e-12

    def test_requires_amtf(self, run_command):
        """Operators are only written as AMTF tensors."""
        with pytest.raises(ArgumentError, match="AMTF"):
            run_command("expected-operator", "op.pgm", kind="translation", dist=TRANSLATION, grid="6x6")

    def test_dense_limit(self, run_command, tmp_path):
        """Grids above 96x96 are refused before any work."""
        with pytest.raises(ArgumentError, match="96x96"):
            run_command("expected-operator", "op.amtf", kind="translation", dist=TRANSLATION, grid="97x97")

        assert not (tmp_path / "op.amtf").exists()


class TestVarianceMapCommand:
    """Tests for variance-map."""

    def test_point_mass_is_black(self, run_command, tmp_path):
        """No spread means zero variance everywhere."""
        run_command("variance-map", "var.pgm", kind="translation", dist="prod(dirac(0),dirac(0))", grid="8x8")

        np.testing.assert_array_equal(read_pgm(tmp_path / "var.pgm").data, np.zeros(64))

    def test_scaled_to_unit_range(self, run_command, tmp_path):
        """A spread distribution yields a map that spans [0, 1]."""
        run_command("variance-map", "var.pgm", kind="rotation", dist="unif(-15,15)", grid="8x8", fixture="square")

        data = read_pgm(tmp_path / "var.pgm").data
        assert data.min() == 0.0
        assert data.max() == 1.0


class TestEigvecsCommand:
    """Tests for eigvecs."""

    def test_writes_images_and_eigenvalues(self, run_command, tmp_path):
        """k images named <stem>_NN plus a descending eigenvalue CSV."""
        experiment = run_command("eigvecs", "ev.pgm", kind="translation", dist=TRANSLATION, grid="8x8", k=3)

        for index in range(3):
            assert read_pgm(tmp_path / f"ev_{index:02d}.pgm").grid == Grid.square(8)
        lines = (tmp_path / "ev.eigenvalues.csv").read_text().splitlines()
        assert lines[0] == "index,eigenvalue"
        values = [float(line.split(",")[1]) for line in lines[1:]]
        assert len(values) == 3
        assert values == sorted(values, reverse=True)
        assert values[0] > 0
        assert len(experiment.outputs) == 4

    def test_streaming_rank_limit(self, run_command):
        """Above 96x96 more eigenvectors than the kept rank is a range error."""
        with pytest.raises(RangeError):
            run_command("eigvecs", "ev.pgm", kind="translation", dist=TRANSLATION, grid="100x100", k=5, rank=4)
