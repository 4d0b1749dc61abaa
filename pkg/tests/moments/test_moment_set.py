"""Tests for dense, pooled and streamed second moments."""

import numpy as np
import pytest

from augmoments.dataio import synth_square
from augmoments.distribution import quadrature
from augmoments.errors import ArgumentError, RangeError, ShapeError
from augmoments.models.distribution import Dirac, Gaussian, Product, QuadratureRule, Uniform
from augmoments.models.grid import Grid, Image
from augmoments.moments import (
    aligned_quadrature,
    moment_set,
    pooled_moments,
    second_moment,
    streaming_moments,
    translation_expected_analytic,
    translation_second_moment_analytic,
)
from augmoments.transform import reference_transform


class TestMomentSet:
    """Tests for moment_set and second_moment."""

    def test_dirac_has_zero_variance(self, noise_image):
        """Test that a point mass gives the transformed image as mean and an exactly zero variance."""
        dist = Dirac(at=0.2)
        moments = moment_set("rotation", dist, noise_image, quadrature(dist))
        transformed = reference_transform("rotation", 0.2, noise_image).data
        np.testing.assert_allclose(moments.mean, transformed, atol=1e-15)
        np.testing.assert_array_equal(moments.variance, 0.0)
        np.testing.assert_allclose(moments.second, np.outer(transformed, transformed), atol=1e-15)

    def test_zero_image(self, small_grid):
        """Test that the zero image has all moments zero."""
        dist = Uniform(lo=-0.5, hi=0.5)
        moments = moment_set("rotation", dist, Image.zeros(small_grid), quadrature(dist, 9))
        assert not moments.mean.any()
        assert not moments.second.any()
        assert not moments.variance.any()

    @pytest.mark.parametrize(
        "kind,dist", [("rotation", Gaussian(mean=0.0, std=0.15)), ("zoom", Gaussian(mean=1.0, std=0.15))]
    )
    def test_second_moment_agrees(self, noise_image, kind, dist):
        """Test that variance + mean mean^T equals the raw second moment."""
        rule = quadrature(dist, 33)
        moments = moment_set(kind, dist, noise_image, rule)
        np.testing.assert_allclose(moments.second, second_moment(kind, dist, noise_image, rule), atol=1e-12)
        np.testing.assert_allclose(moments.second, moments.variance + np.outer(moments.mean, moments.mean), atol=0)

    @pytest.mark.parametrize("kind", ["rotation", "shear-horizontal", "zoom"])
    def test_variance_is_psd(self, noise_image, kind):
        """Test that the variance is symmetric with no negative eigenvalues beyond round-off."""
        dist = Uniform(lo=0.8, hi=1.2) if kind == "zoom" else Uniform(lo=-0.3, hi=0.3)
        moments = moment_set(kind, dist, noise_image, quadrature(dist, 17))
        np.testing.assert_array_equal(moments.variance, moments.variance.T)
        assert np.linalg.eigvalsh(moments.variance).min() >= -1e-12

    def test_variance_grows_with_spread(self, noise_image):
        """Test that total variance increases with the rotation standard deviation."""
        totals = []
        for std in (0.05, 0.1, 0.2):
            dist = Gaussian(mean=0.0, std=std)
            totals.append(np.trace(moment_set("rotation", dist, noise_image, quadrature(dist, 65)).variance))
        assert 0.0 < totals[0] < totals[1] < totals[2]

    def test_pixel_variance_is_diagonal(self, noise_image):
        """Test that the per-pixel variance image is the clipped diagonal."""
        dist = Uniform(lo=-0.3, hi=0.3)
        moments = moment_set("rotation", dist, noise_image, quadrature(dist, 17))
        np.testing.assert_array_equal(moments.pixel_variance.data, np.clip(np.diag(moments.variance), 0.0, None))
        np.testing.assert_array_equal(moments.mean_image.data, moments.mean)

    def test_translation_variance_sits_on_edges(self):
        """Test that Gaussian translation of a sharp square puts the pixel variance on its edges."""
        img = synth_square(Grid.square(32))
        dist = Product(first=Gaussian(mean=0.0, std=0.1), second=Gaussian(mean=0.0, std=0.1))
        rule = aligned_quadrature("translation", dist, img.grid, panel_nodes=3)
        variance = moment_set("translation", dist, img, rule).pixel_variance.to_array()

        square = np.zeros((32, 32), dtype=bool)
        square[8:24, 8:24] = True
        inner = np.zeros_like(square)
        inner[9:23, 9:23] = True
        edge = variance[square & ~inner]
        interior = variance[15:17, 15:17]
        assert edge.mean() > 5.0 * interior.mean()

    def test_dense_limit(self):
        """Test that grids above 96x96 must use streaming moments."""
        dist = Dirac(at=0.0)
        with pytest.raises(ArgumentError):
            moment_set("rotation", dist, Image.zeros(Grid.square(97)), quadrature(dist))
        with pytest.raises(ArgumentError):
            second_moment("rotation", dist, Image.zeros(Grid.square(97)), quadrature(dist))

    def test_thread_count_does_not_change_result(self, noise_image):
        """Test that chunks are reduced in node order whatever the worker count."""
        dist = Gaussian(mean=0.0, std=0.2)
        rule = quadrature(dist, 600)
        one = moment_set("rotation", dist, noise_image, rule, threads=1)
        four = moment_set("rotation", dist, noise_image, rule, threads=4)
        np.testing.assert_array_equal(one.variance, four.variance)
        np.testing.assert_array_equal(one.mean, four.mean)


class TestPooledMoments:
    """Tests for pooled_moments."""

    def test_matches_per_image_moments(self, random_image_factory):
        """Test pooled means and variance sum against per-image moment sets."""
        grid = Grid.square(6)
        images = [random_image_factory(grid, seed) for seed in range(3)]
        dist = Uniform(lo=-0.3, hi=0.3)
        rule = quadrature(dist, 17)
        means, variance_sum = pooled_moments("rotation", dist, np.stack([img.data for img in images]), grid, rule)
        per_image = [moment_set("rotation", dist, img, rule) for img in images]
        np.testing.assert_allclose(means, np.stack([m.mean for m in per_image]), atol=1e-12)
        np.testing.assert_allclose(variance_sum, sum(m.variance for m in per_image), atol=1e-10)

    def test_separable_translation_matches_per_node_sum(self, random_image_factory):
        """Test that the Kronecker path for tensor-product translation rules equals summing node by node."""
        grid = Grid(height=5, width=7)
        pixels = np.stack([random_image_factory(grid, seed).data for seed in range(3)])
        dist = Product(first=Gaussian(mean=0.02, std=0.1), second=Uniform(lo=-0.2, hi=0.15))
        rule = aligned_quadrature("translation", dist, grid, panel_nodes=4)
        flat = QuadratureRule(thetas=rule.thetas, weights=rule.weights)
        means, variance_sum = pooled_moments("translation", dist, pixels, grid, rule)
        flat_means, flat_variance_sum = pooled_moments("translation", dist, pixels, grid, flat)
        np.testing.assert_allclose(means, flat_means, atol=1e-12)
        np.testing.assert_allclose(variance_sum, flat_variance_sum, atol=1e-10)

    def test_aligned_rule_matches_closed_forms(self, random_image_factory):
        """Test that dataset moments under a wide Gaussian translation agree with the exact kernels."""
        grid = Grid.square(10)
        images = [random_image_factory(grid, seed) for seed in range(4)]
        dist = Product(first=Gaussian(mean=0.0, std=0.1), second=Gaussian(mean=0.0, std=0.1))
        rule = aligned_quadrature("translation", dist, grid, panel_nodes=8)
        means, variance_sum = pooled_moments("translation", dist, np.stack([img.data for img in images]), grid, rule)

        exact_means = np.stack([translation_expected_analytic(img, dist).data for img in images])
        exact_variance_sum = sum(
            translation_second_moment_analytic(img, dist) - np.outer(mean, mean)
            for img, mean in zip(images, exact_means, strict=True)
        )
        np.testing.assert_allclose(means, exact_means, atol=1e-8)
        assert np.linalg.norm(variance_sum - exact_variance_sum) <= 1e-7 * np.linalg.norm(exact_variance_sum)

    def test_column_mismatch(self, small_grid):
        """Test that pixel rows must have D columns."""
        dist = Dirac(at=0.0)
        with pytest.raises(ShapeError):
            pooled_moments("rotation", dist, np.zeros((2, 10)), small_grid, quadrature(dist))


class TestStreamingMoments:
    """Tests for streaming_moments."""

    @pytest.fixture
    def setup(self, noise_image):
        dist = Gaussian(mean=0.0, std=0.1)
        rule = quadrature(dist, 33)
        dense = moment_set("rotation", dist, noise_image, rule)
        streamed = streaming_moments("rotation", dist, noise_image, rule, rank=6, iterations=50, seed=3, rows=[27, 0])
        return dense, streamed

    def test_mean_and_diagonal(self, setup):
        """Test that the streamed mean and variance diagonal match the dense moments."""
        dense, streamed = setup
        np.testing.assert_allclose(streamed.mean, dense.mean, atol=1e-12)
        np.testing.assert_allclose(streamed.variance_diagonal, np.clip(np.diag(dense.variance), 0.0, None), atol=1e-12)

    def test_selected_rows(self, setup):
        """Test that requested variance rows are returned exactly."""
        dense, streamed = setup
        assert sorted(streamed.rows) == [0, 27]
        for row in (0, 27):
            np.testing.assert_allclose(streamed.rows[row], dense.variance[row], atol=1e-12)

    def test_top_eigenvalues(self, setup):
        """Test that subspace iteration finds the leading eigenvalues of the dense variance."""
        dense, streamed = setup
        exact = np.linalg.eigvalsh(dense.variance)[::-1]
        assert streamed.eigenvalues.shape == (6,)
        assert streamed.eigenvectors.shape == (64, 6)
        np.testing.assert_allclose(streamed.eigenvalues[:2], exact[:2], rtol=1e-6)

    def test_row_out_of_range(self, noise_image):
        """Test that a variance row outside [0, D) raises RangeError."""
        dist = Dirac(at=0.0)
        with pytest.raises(RangeError):
            streaming_moments("rotation", dist, noise_image, quadrature(dist), rank=1, rows=[64])
