"""Tests for the expected-loss minimizer."""

import numpy as np
import pytest

from augmoments.errors import ArgumentError, NumericalError, ShapeError
from augmoments.losses import expected_mse, expected_mse_grad, optimal_linear
from augmoments.models.losses import AugmentedDataset, LinearModel


def dataset(n: int = 12, d: int = 4, k: int = 2, variance_scale: float = 0.0, seed: int = 0) -> AugmentedDataset:
    rng = np.random.default_rng(seed)
    factors = [variance_scale * rng.standard_normal((d, 2)) for _ in range(n)]
    return AugmentedDataset.from_samples(
        rng.standard_normal((n, d)), [f @ f.T for f in factors], rng.standard_normal((n, k))
    )


class TestOptimalLinear:
    """Tests for optimal_linear."""

    def test_no_augmentation_is_least_squares(self):
        """Test that zero variance recovers ordinary least squares with an intercept."""
        data = dataset()
        model = optimal_linear(data)
        design = np.column_stack([data.means, np.ones(data.size)])
        coefficients, *_ = np.linalg.lstsq(design, data.targets, rcond=None)
        np.testing.assert_allclose(model.weights, coefficients[:-1].T, atol=1e-10)
        np.testing.assert_allclose(model.bias, coefficients[-1], atol=1e-10)
        assert model.diagnostics.mode == "joint"
        assert model.diagnostics.jitter == 0.0

    def test_joint_optimum_is_stationary(self):
        """Test that the expected-loss gradient vanishes at the joint optimum."""
        data = dataset(variance_scale=0.5)
        grad_weights, grad_bias = expected_mse_grad(optimal_linear(data), data)
        np.testing.assert_allclose(grad_weights, 0.0, atol=1e-9)
        np.testing.assert_allclose(grad_bias, 0.0, atol=1e-9)

    def test_fixed_bias_is_stationary_in_weights(self):
        """Test that with a fixed bias only the weight gradient vanishes and the bias is kept."""
        data = dataset(variance_scale=0.5)
        bias = np.array([0.3, -1.0])
        model = optimal_linear(data, mode="fixed-bias", bias=bias)
        np.testing.assert_array_equal(model.bias, bias)
        grad_weights, _ = expected_mse_grad(model, data)
        np.testing.assert_allclose(grad_weights, 0.0, atol=1e-9)

    def test_augmentation_shrinks_weights(self):
        """Test that added variance acts as a regularizer on the weight norm."""
        plain = optimal_linear(dataset())
        augmented = optimal_linear(dataset(variance_scale=2.0))
        assert np.linalg.norm(augmented.weights) < np.linalg.norm(plain.weights)

    def test_optimum_beats_perturbations(self):
        """Test that nearby models have a larger expected loss."""
        data = dataset(variance_scale=0.3, seed=4)
        model = optimal_linear(data)
        best = expected_mse(model, data)
        rng = np.random.default_rng(9)
        for _ in range(5):
            step = 1e-3 * rng.standard_normal(model.weights.shape)
            nudged = LinearModel(weights=model.weights + step, bias=model.bias)
            assert expected_mse(nudged, data) > best

    def test_singular_gram_gets_jitter(self):
        """Test that a rank-deficient Gram matrix is solved with ridge jitter."""
        means = np.tile([1.0, 2.0], (3, 1))
        data = AugmentedDataset.from_samples(means, [np.zeros((2, 2))] * 3, np.ones((3, 1)))
        model = optimal_linear(data, mode="fixed-bias")
        assert model.diagnostics.jitter > 0.0
        assert np.all(np.isfinite(model.weights))
        np.testing.assert_allclose(model.predict(means), 1.0, atol=1e-6)

    def test_zero_gram_raises(self):
        """Test that identical inputs with no variance leave W undetermined."""
        means = np.tile([1.0, 2.0], (3, 1))
        data = AugmentedDataset.from_samples(means, [np.zeros((2, 2))] * 3, np.ones((3, 1)))
        with pytest.raises(NumericalError):
            optimal_linear(data)

    def test_argument_checks(self):
        """Test mode and bias validation."""
        data = dataset()
        with pytest.raises(ArgumentError):
            optimal_linear(data, bias=np.zeros(2))
        with pytest.raises(ArgumentError):
            optimal_linear(data, mode="ridge")
        with pytest.raises(ShapeError):
            optimal_linear(data, mode="fixed-bias", bias=np.zeros(3))
