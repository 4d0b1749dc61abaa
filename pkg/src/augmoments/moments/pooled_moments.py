"""Moments of a whole dataset under one augmentation family, in pooled form.

The expected loss needs the per-sample means and only the sum of the
per-sample variances, so the N x D x D stack is never formed. Sum_n E[T x_n x_n^T T^T]
equals E[T G T^T] with the Gram matrix G = sum_n x_n x_n^T, which is what the
separable translation path contracts against.
"""

# third party
import numpy as np
from joblib import Parallel, delayed

# local
from augmoments.errors import ShapeError
from augmoments.models.distribution import ParamDistribution, QuadratureRule
from augmoments.models.grid import Grid
from augmoments.models.transform import TransformKind
from augmoments.moments._checks import check_arity, check_dense, weighted_chunks
from augmoments.transform.bilinear import axis_stencil
from augmoments.transform.build_operator import build_operator
from augmoments.utils import get_default_logger, resolve_threads

NODES_PER_CHUNK = 16


def _partial(
    kind: TransformKind, thetas: np.ndarray, weights: np.ndarray, pixels: np.ndarray, grid: Grid
) -> tuple[np.ndarray, np.ndarray]:
    means = np.zeros_like(pixels)
    second = np.zeros((grid.size, grid.size))
    for theta, weight in zip(thetas, weights, strict=True):
        transformed = np.asarray((build_operator(kind, theta, grid).matrix @ pixels.T).T)
        means += weight * transformed
        second += weight * (transformed.T @ transformed)
    return means, second


def axis_operators(size: int, rule: QuadratureRule) -> np.ndarray:
    """(n, size, size) dense 1-D shift operators, one per node of a scalar rule."""
    stack = np.zeros((len(rule), size, size))
    for k, theta in enumerate(rule.thetas[:, 0]):
        rows, cols, weights = axis_stencil(size, float(theta))
        stack[k, rows, cols] = weights
    return stack


def _separable_translation(pixels: np.ndarray, grid: Grid, quad: QuadratureRule) -> tuple[np.ndarray, np.ndarray]:
    height, width = grid.shape
    first, second = quad.factors
    along_x = axis_operators(width, first)
    along_y = axis_operators(height, second)

    mean_x = np.einsum("k,kjc->jc", first.weights, along_x)
    mean_y = np.einsum("k,kir->ir", second.weights, along_y)
    images = pixels.reshape(-1, height, width)
    means = np.einsum("ir,nrc,jc->nij", mean_y, images, mean_x, optimize=True).reshape(len(pixels), grid.size)

    # E[A (x) A] per axis, rows (i, k) and columns (r, p)
    pairs_x = np.einsum("k,kjc,kls->jlcs", first.weights, along_x, along_x, optimize=True)
    pairs_y = np.einsum("k,kir,kmp->imrp", second.weights, along_y, along_y, optimize=True)
    gram = (pixels.T @ pixels).reshape(height, width, height, width).transpose(0, 2, 1, 3)
    contracted = pairs_y.reshape(height**2, height**2) @ gram.reshape(height**2, width**2)
    contracted = contracted @ pairs_x.reshape(width**2, width**2).T
    second_moment = contracted.reshape(height, height, width, width).transpose(0, 2, 1, 3).reshape(grid.size, -1)
    return means, second_moment


def pooled_moments(
    kind: TransformKind | str,
    dist: ParamDistribution,
    pixels: np.ndarray,
    grid: Grid,
    quad: QuadratureRule,
    threads: int | None = None,
) -> tuple[np.ndarray, np.ndarray]:
    """Return (means, variance_sum): the N x D expected images and sum_n V[T(x_n)].

    Translations under a tensor-product rule take the separable path; every
    other case sums per-node operators in ascending node order.
    """
    kind = TransformKind(kind)
    check_arity(kind, dist, quad)
    check_dense(grid)
    pixels = np.atleast_2d(np.asarray(pixels, dtype=np.float64))
    if pixels.shape[1] != grid.size:
        raise ShapeError(f"pixels have {pixels.shape[1]} columns, grid {grid} needs {grid.size}")
    logger = get_default_logger()

    if kind is TransformKind.TRANSLATION and quad.factors is not None:
        logger.debug(f"pooled_moments: separable translation of {pixels.shape[0]} images, {len(quad)} nodes")
        means, second = _separable_translation(pixels, grid, quad)
    else:
        chunks = weighted_chunks(quad, NODES_PER_CHUNK)
        logger.debug(f"pooled_moments: {pixels.shape[0]} images, {len(quad)} nodes, {len(chunks)} chunks")
        means = np.zeros_like(pixels)
        second = np.zeros((grid.size, grid.size))
        for partial_means, partial_second in Parallel(
            n_jobs=resolve_threads(threads), prefer="threads", return_as="generator"
        )(delayed(_partial)(kind, thetas, weights, pixels, grid) for thetas, weights in chunks):
            means += partial_means
            second += partial_second
    variance_sum = second - means.T @ means
    return means, 0.5 * (variance_sum + variance_sum.T)
