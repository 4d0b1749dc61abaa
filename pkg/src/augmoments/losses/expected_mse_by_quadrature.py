"""Expected squared error evaluated by definition, transforming every image at every node."""

# stdlib
from collections.abc import Sequence

# third party
import numpy as np

# local
from augmoments.errors import ShapeError
from augmoments.models.distribution import QuadratureRule
from augmoments.models.grid import Image
from augmoments.models.losses import LinearModel
from augmoments.models.transform import TransformKind
from augmoments.transform.reference_transform import transform_stack


def expected_mse_by_quadrature(
    model: LinearModel,
    kind: TransformKind | str,
    images: Sequence[Image],
    targets: np.ndarray,
    quad: QuadratureRule,
) -> float:
    """sum_n sum_k w_k ||y_n - W T_{theta_k}(x_n) - b||^2."""
    targets = np.atleast_2d(np.asarray(targets, dtype=np.float64))
    if targets.shape != (len(images), model.outputs):
        raise ShapeError(f"targets have shape {targets.shape}, expected ({len(images)}, {model.outputs})")
    total = 0.0
    for img, target in zip(images, targets, strict=True):
        if img.grid.size != model.inputs:
            raise ShapeError(f"image on {img.grid} has {img.grid.size} pixels, model takes {model.inputs}")
        residual = target - model.predict(transform_stack(kind, quad.thetas, img))
        total += quad.expect(np.sum(residual**2, axis=1))
    return total
