"""Monte-Carlo estimate of the expected squared error of a linear model on one image."""

# third party
import numpy as np

# local
from augmoments.distribution.sample import make_rng, sample_many
from augmoments.errors import ArgumentError, ShapeError
from augmoments.models.distribution import ParamDistribution
from augmoments.models.grid import Image
from augmoments.models.losses import LinearModel
from augmoments.models.transform import TransformKind
from augmoments.montecarlo.mc_expected_image import DRAWS_PER_CHUNK
from augmoments.transform.reference_transform import transform_stack


def per_draw_losses(
    model: LinearModel, img: Image, target: np.ndarray, kind: TransformKind | str, thetas: np.ndarray
) -> np.ndarray:
    """||y - W T_theta(x) - b||^2 for each row of `thetas`."""
    target = np.asarray(target, dtype=np.float64)
    if target.shape != (model.outputs,) or img.grid.size != model.inputs:
        raise ShapeError(
            f"model maps {model.inputs} -> {model.outputs}, got image of {img.grid.size} pixels "
            f"and target of shape {target.shape}"
        )
    losses = np.empty(len(thetas))
    for start in range(0, len(thetas), DRAWS_PER_CHUNK):
        stop = min(start + DRAWS_PER_CHUNK, len(thetas))
        residual = target - model.predict(transform_stack(kind, thetas[start:stop], img))
        losses[start:stop] = np.sum(residual**2, axis=1)
    return losses


def mc_expected_mse(
    model: LinearModel,
    img: Image,
    target: np.ndarray,
    kind: TransformKind | str,
    dist: ParamDistribution,
    n: int,
    seed: int,
    stream: int = 0,
) -> float:
    """Average squared error over n draws from generator (seed, stream)."""
    if n < 1:
        raise ArgumentError(f"sample count must be >= 1, got {n}")
    thetas = sample_many(dist, make_rng(seed, stream), n)
    return float(per_draw_losses(model, img, target, kind, thetas).mean())
