"""Second moment E[T(x) T(x)^T] by quadrature."""

# third party
import numpy as np
from joblib import Parallel, delayed

# local
from augmoments.models.distribution import ParamDistribution, QuadratureRule
from augmoments.models.grid import Image
from augmoments.models.transform import TransformKind
from augmoments.moments._checks import check_arity, check_dense, weighted_chunks
from augmoments.transform.reference_transform import transform_stack
from augmoments.utils import get_default_logger, resolve_threads

NODES_PER_GEMM = 256


def _partial_second(kind: TransformKind, thetas: np.ndarray, weights: np.ndarray, img: Image) -> np.ndarray:
    scaled = np.sqrt(weights)[:, None] * transform_stack(kind, thetas, img)
    return scaled.T @ scaled


def second_moment(
    kind: TransformKind | str,
    dist: ParamDistribution,
    img: Image,
    quad: QuadratureRule,
    threads: int | None = None,
) -> np.ndarray:
    """Sum_k weight_k (M(theta_k) x)(M(theta_k) x)^T as a dense symmetric D x D matrix."""
    kind = TransformKind(kind)
    check_arity(kind, dist, quad)
    check_dense(img.grid)
    chunks = weighted_chunks(quad, NODES_PER_GEMM)
    get_default_logger().debug(f"second_moment: {kind} on {img.grid} with {len(quad)} nodes in {len(chunks)} chunks")

    second = np.zeros((img.grid.size, img.grid.size))
    partials = Parallel(n_jobs=resolve_threads(threads), prefer="threads", return_as="generator")(
        delayed(_partial_second)(kind, thetas, weights, img) for thetas, weights in chunks
    )
    for partial in partials:
        second += partial
    return 0.5 * (second + second.T)
