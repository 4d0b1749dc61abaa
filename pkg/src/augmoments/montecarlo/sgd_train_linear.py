"""Linear one-hot regression trained on sampled augmentations or on the exact expected loss.

With an integer n_aug every mini-batch step averages the loss over n_aug fresh
augmentations of each sample in the batch. "analytic" takes one full-batch
gradient step per epoch on the exact expected loss, the mean of
||y - W mu - b||^2 plus the pooled regularizer Tr(W Sigma W^T) / N, so its curve
does not depend on the batch size. "closed_form" skips training and evaluates
the minimizer of the expected loss.
"""

# third party
import numpy as np

# local
from augmoments.distribution.quadrature import DEFAULT_NODES
from augmoments.distribution.sample import make_rng, sample_many
from augmoments.errors import ArgumentError, ShapeError
from augmoments.losses.expected_mse import expected_mse_grad
from augmoments.losses.optimal_linear import optimal_linear
from augmoments.models.dataset import LabeledDataset
from augmoments.models.distribution import ParamDistribution, QuadratureRule
from augmoments.models.losses import AugmentedDataset, LinearModel
from augmoments.models.records import AugmentationCount, TrainCurve
from augmoments.models.transform import TransformKind
from augmoments.moments.breakpoints import aligned_quadrature
from augmoments.moments.pooled_moments import pooled_moments
from augmoments.transform.reference_transform import warp_batch
from augmoments.utils import get_default_logger

PANEL_NODES = 8


def evaluate(model: LinearModel, data: LabeledDataset) -> tuple[float, float]:
    """(mean squared error over all one-hot entries, argmax accuracy)."""
    outputs = model.predict(data.pixels)
    mse = float(np.mean((data.one_hot - outputs) ** 2))
    accuracy = float(np.mean(np.argmax(outputs, axis=1) == data.labels))
    return mse, accuracy


def _check(train: LabeledDataset, test: LabeledDataset, n_aug, epochs: int, lr: float, batch_size: int) -> None:
    if len(train) == 0 or len(test) == 0:
        raise ArgumentError("train and test datasets must be non-empty")
    if train.grid != test.grid or train.num_classes != test.num_classes:
        raise ShapeError(f"train ({train.grid}, K={train.num_classes}) and test ({test.grid}, K={test.num_classes})")
    if not (np.isfinite(lr) and lr >= 0):
        raise ArgumentError(f"learning rate must be finite and >= 0, got {lr}")
    if epochs < 0:
        raise ArgumentError(f"epochs must be >= 0, got {epochs}")
    if batch_size < 1:
        raise ArgumentError(f"batch size must be >= 1, got {batch_size}")
    if not (n_aug in ("analytic", "closed_form") or (isinstance(n_aug, int) and n_aug >= 1)):
        raise ArgumentError(f"n_aug must be a count >= 1, 'analytic' or 'closed_form', got {n_aug!r}")


def _pooled(
    train: LabeledDataset, kind: TransformKind, dist: ParamDistribution, quad: QuadratureRule | None, threads
) -> AugmentedDataset:
    quad = quad or aligned_quadrature(kind, dist, train.grid, DEFAULT_NODES, PANEL_NODES)
    means, variance_sum = pooled_moments(kind, dist, train.pixels, train.grid, quad, threads=threads)
    return AugmentedDataset(means=means, targets=train.one_hot, variance_sum=variance_sum)


def sgd_train_linear(
    train: LabeledDataset,
    test: LabeledDataset,
    kind: TransformKind | str,
    dist: ParamDistribution,
    n_aug: AugmentationCount,
    epochs: int = 100,
    lr: float = 0.01,
    batch_size: int = 32,
    seed: int = 0,
    quad: QuadratureRule | None = None,
    threads: int | None = None,
) -> list[TrainCurve]:
    """Train from zero weights and report test metrics after every epoch (epoch 0 is the initialization).

    Args:
        train: Training images and labels.
        test: Evaluation images and labels.
        kind: Augmentation family.
        dist: Augmentation parameter distribution.
        n_aug: Augmentations per sample per step, "analytic" or "closed_form".
        epochs: Passes over the training samples.
        lr: Step size.
        batch_size: Training samples per step of the sampled modes.
        seed: Seeds the shuffling and the augmentation draws.
        quad: Rule for the exact moments; kink-aligned with 8 nodes per panel by default.
        threads: Worker count for the exact moments.

    Returns:
        One TrainCurve per epoch; a single record at `epochs` for "closed_form".
    """
    kind = TransformKind(kind)
    _check(train, test, n_aug, epochs, lr, batch_size)
    logger = get_default_logger()

    def record(model: LinearModel, epoch: int) -> TrainCurve:
        mse, accuracy = evaluate(model, test)
        return TrainCurve(
            train_size=len(train), n_aug=n_aug, epoch=epoch, test_mse=mse, test_accuracy=accuracy, seed=seed
        )

    if n_aug == "closed_form":
        model = optimal_linear(_pooled(train, kind, dist, quad, threads))
        return [record(model, epochs)]

    pooled = _pooled(train, kind, dist, quad, threads) if n_aug == "analytic" else None
    rng = make_rng(seed)
    targets = train.one_hot
    weights = np.zeros((train.num_classes, train.grid.size))
    bias = np.zeros(train.num_classes)
    curves = [record(LinearModel(weights=weights, bias=bias), 0)]

    for epoch in range(1, epochs + 1):
        if pooled is not None:
            grad_weights, grad_bias = expected_mse_grad(LinearModel(weights=weights, bias=bias), pooled)
            weights = weights - lr * grad_weights / len(train)
            bias = bias - lr * grad_bias / len(train)
        else:
            order = rng.permutation(len(train))
            for start in range(0, len(train), batch_size):
                repeated = np.repeat(order[start : start + batch_size], n_aug)
                thetas = sample_many(dist, rng, len(repeated))
                inputs = warp_batch(kind, thetas, train.pixels[repeated], train.grid)
                residual = targets[repeated] - (inputs @ weights.T + bias)
                weights = weights + lr * 2.0 * residual.T @ inputs / len(repeated)
                bias = bias + lr * 2.0 * residual.sum(axis=0) / len(repeated)
        curves.append(record(LinearModel(weights=weights, bias=bias), epoch))
        logger.debug(f"sgd_train_linear: n_aug={n_aug} epoch {epoch} test_mse={curves[-1].test_mse:.6f}")
    return curves
