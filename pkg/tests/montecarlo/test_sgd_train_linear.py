"""Tests for the linear training baseline."""

import numpy as np
import pytest

from augmoments.distribution.quadrature import DEFAULT_NODES
from augmoments.errors import ArgumentError, ShapeError
from augmoments.models.dataset import LabeledDataset
from augmoments.models.distribution import Dirac, Gaussian, Product
from augmoments.models.grid import Grid
from augmoments.models.losses import LinearModel
from augmoments.moments import aligned_quadrature
from augmoments.montecarlo import evaluate, sgd_train_linear


@pytest.fixture
def labeled() -> LabeledDataset:
    """Twenty random 4x4 images in three classes."""
    rng = np.random.default_rng(12)
    grid = Grid.square(4)
    return LabeledDataset(grid=grid, pixels=rng.random((20, grid.size)), labels=rng.integers(0, 3, 20), num_classes=3)


class TestEvaluate:
    """Tests for evaluate."""

    def test_zero_model(self, labeled):
        """Test that the zero model has MSE 1/K on one-hot targets."""
        mse, accuracy = evaluate(LinearModel.zeros(3, 16), labeled)
        assert mse == pytest.approx(1 / 3)
        assert accuracy == pytest.approx(np.mean(labeled.labels == 0))


class TestSgdTrainLinear:
    """Tests for sgd_train_linear."""

    def test_zero_learning_rate_is_flat(self, labeled):
        """Test that lr = 0 keeps the initial metrics at every epoch."""
        curves = sgd_train_linear(labeled, labeled, "rotation", Gaussian(mean=0.0, std=0.1), 2, epochs=3, lr=0.0)
        assert [c.epoch for c in curves] == [0, 1, 2, 3]
        assert all(c.test_mse == pytest.approx(1 / 3) for c in curves)
        assert all(c.train_size == 20 and c.n_aug == 2 for c in curves)

    def test_seeded(self, labeled):
        """Test that the same seed reproduces the sampled-augmentation curve."""
        kwargs = dict(epochs=2, lr=0.05, batch_size=8, seed=3)
        first = sgd_train_linear(labeled, labeled, "rotation", Gaussian(mean=0.0, std=0.2), 3, **kwargs)
        again = sgd_train_linear(labeled, labeled, "rotation", Gaussian(mean=0.0, std=0.2), 3, **kwargs)
        assert first == again

    @pytest.mark.parametrize("n_aug", [1, "analytic"])
    def test_full_batch_descent_lowers_loss(self, labeled, n_aug):
        """Test that full-batch steps with a small rate reduce the training error."""
        curves = sgd_train_linear(
            labeled, labeled, "rotation", Gaussian(mean=0.0, std=0.05), n_aug, epochs=5, lr=0.05, batch_size=20
        )
        assert curves[-1].test_mse < curves[0].test_mse

    def test_identity_augmentation_modes_agree(self, labeled):
        """Test that sampled and analytic training coincide when the augmentation is the identity."""
        kwargs = dict(epochs=3, lr=0.05, batch_size=20, seed=1)
        sampled = sgd_train_linear(labeled, labeled, "rotation", Dirac(at=0.0), 1, **kwargs)
        analytic = sgd_train_linear(labeled, labeled, "rotation", Dirac(at=0.0), "analytic", **kwargs)
        np.testing.assert_allclose([c.test_mse for c in sampled], [c.test_mse for c in analytic], rtol=1e-10)

    def test_analytic_ignores_batch_size(self, labeled):
        """Test that the exact-loss mode takes one full-batch step per epoch whatever the batch size."""
        dist = Gaussian(mean=0.0, std=0.1)
        small = sgd_train_linear(labeled, labeled, "rotation", dist, "analytic", epochs=4, lr=0.05, batch_size=3)
        full = sgd_train_linear(labeled, labeled, "rotation", dist, "analytic", epochs=4, lr=0.05, batch_size=20)
        assert small == full

    def test_default_rule_is_kink_aligned(self, labeled):
        """Test that the exact moments default to the kink-aligned rule with 8 nodes per panel."""
        dist = Product(first=Gaussian(mean=0.0, std=0.1), second=Gaussian(mean=0.0, std=0.1))
        rule = aligned_quadrature("translation", dist, labeled.grid, DEFAULT_NODES, 8)
        default = sgd_train_linear(labeled, labeled, "translation", dist, "closed_form")
        explicit = sgd_train_linear(labeled, labeled, "translation", dist, "closed_form", quad=rule)
        assert default == explicit

    def test_closed_form_single_record(self, labeled):
        """Test that the closed form reports one record at the final epoch and beats the zero model."""
        curves = sgd_train_linear(labeled, labeled, "rotation", Dirac(at=0.0), "closed_form", epochs=7)
        assert len(curves) == 1
        assert curves[0].epoch == 7
        assert curves[0].test_mse < 1 / 3

    @pytest.mark.parametrize(
        "kwargs",
        [dict(n_aug=0), dict(n_aug="mc"), dict(lr=-1.0), dict(lr=float("nan")), dict(epochs=-1), dict(batch_size=0)],
    )
    def test_argument_checks(self, labeled, kwargs):
        """Test validation of the training options."""
        options = dict(n_aug=1, epochs=1, lr=0.01, batch_size=4) | kwargs
        with pytest.raises(ArgumentError):
            sgd_train_linear(labeled, labeled, "rotation", Dirac(at=0.0), **options)

    def test_mismatched_test_set(self, labeled):
        """Test that train and test sets must share grid and classes."""
        other = LabeledDataset(
            grid=Grid.square(3), pixels=np.zeros((2, 9)), labels=np.zeros(2, dtype=int), num_classes=3
        )
        with pytest.raises(ShapeError):
            sgd_train_linear(labeled, other, "rotation", Dirac(at=0.0), 1, epochs=1)
