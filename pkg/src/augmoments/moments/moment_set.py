"""Mean, second moment and variance of T(x) by quadrature."""

# third party
import numpy as np
from joblib import Parallel, delayed

# local
from augmoments.models.distribution import ParamDistribution, QuadratureRule
from augmoments.models.grid import Image
from augmoments.models.moments import MomentSet
from augmoments.models.transform import TransformKind
from augmoments.moments._checks import check_arity, check_dense, weighted_chunks
from augmoments.moments.second_moment import NODES_PER_GEMM
from augmoments.transform.reference_transform import transform_stack
from augmoments.utils import get_default_logger, resolve_threads


def _partial_mean(kind: TransformKind, thetas: np.ndarray, weights: np.ndarray, img: Image) -> np.ndarray:
    return weights @ transform_stack(kind, thetas, img)


def _partial_centered(
    kind: TransformKind, thetas: np.ndarray, weights: np.ndarray, img: Image, mean: np.ndarray
) -> np.ndarray:
    centered = np.sqrt(weights)[:, None] * (transform_stack(kind, thetas, img) - mean)
    return centered.T @ centered


def moment_set(
    kind: TransformKind | str,
    dist: ParamDistribution,
    img: Image,
    quad: QuadratureRule,
    threads: int | None = None,
) -> MomentSet:
    """Moments of T(x) under p(theta).

    The variance is accumulated from centered samples and the second moment is
    recovered as variance + mean mean^T, which keeps the variance PSD and makes
    a Dirac distribution give an exactly zero variance.
    """
    kind = TransformKind(kind)
    check_arity(kind, dist, quad)
    check_dense(img.grid)
    n_jobs = resolve_threads(threads)
    chunks = weighted_chunks(quad, NODES_PER_GEMM)
    get_default_logger().debug(f"moment_set: {kind} on {img.grid} with {len(quad)} nodes, {n_jobs} threads")

    mean = np.zeros(img.grid.size)
    for partial in Parallel(n_jobs=n_jobs, prefer="threads", return_as="generator")(
        delayed(_partial_mean)(kind, thetas, weights, img) for thetas, weights in chunks
    ):
        mean += partial

    variance = np.zeros((img.grid.size, img.grid.size))
    for partial in Parallel(n_jobs=n_jobs, prefer="threads", return_as="generator")(
        delayed(_partial_centered)(kind, thetas, weights, img, mean) for thetas, weights in chunks
    ):
        variance += partial
    variance = 0.5 * (variance + variance.T)
    return MomentSet(grid=img.grid, mean=mean, second=variance + np.outer(mean, mean), variance=variance)
