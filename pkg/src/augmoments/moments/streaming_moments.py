"""Moments for grids too large for a dense D x D variance.

Accumulates the mean, the variance diagonal and selected variance rows, and
extracts the top-r eigenpairs by subspace iteration with matrix-free products
V[T(x)] @ B = sum_k w_k c_k (c_k^T B), c_k = T_k(x) - mean.
"""

# stdlib
from collections.abc import Iterable

# third party
import numpy as np

# local
from augmoments.errors import RangeError
from augmoments.models.distribution import ParamDistribution, QuadratureRule
from augmoments.models.grid import Image
from augmoments.models.moments import StreamingMoments
from augmoments.models.transform import TransformKind
from augmoments.moments._checks import check_arity, weighted_chunks
from augmoments.spectral.subspace_iteration import subspace_iteration
from augmoments.transform.reference_transform import transform_stack
from augmoments.utils import get_default_logger

NODES_PER_CHUNK = 256


def streaming_moments(
    kind: TransformKind | str,
    dist: ParamDistribution,
    img: Image,
    quad: QuadratureRule,
    rank: int = 16,
    iterations: int = 20,
    seed: int = 0,
    rows: Iterable[int] = (),
) -> StreamingMoments:
    kind = TransformKind(kind)
    check_arity(kind, dist, quad)
    size = img.grid.size
    rows = sorted(set(int(r) for r in rows))
    for r in rows:
        if not 0 <= r < size:
            raise RangeError(f"variance row {r} outside [0, {size})")
    chunks = weighted_chunks(quad, NODES_PER_CHUNK)
    get_default_logger().debug(f"streaming_moments: {kind} on {img.grid}, rank {rank}, {iterations} iterations")

    mean = np.zeros(size)
    for thetas, weights in chunks:
        mean += weights @ transform_stack(kind, thetas, img)

    def centered(thetas: np.ndarray, weights: np.ndarray) -> np.ndarray:
        return np.sqrt(weights)[:, None] * (transform_stack(kind, thetas, img) - mean)

    diagonal = np.zeros(size)
    selected = np.zeros((len(rows), size))
    for thetas, weights in chunks:
        block = centered(thetas, weights)
        diagonal += np.einsum("ij,ij->j", block, block)
        selected += block[:, rows].T @ block

    def matvec(basis: np.ndarray) -> np.ndarray:
        product = np.zeros_like(basis)
        for thetas, weights in chunks:
            block = centered(thetas, weights)
            product += block.T @ (block @ basis)
        return product

    eigenvalues, eigenvectors = subspace_iteration(matvec, size, rank, iterations=iterations, seed=seed)
    return StreamingMoments(
        grid=img.grid,
        mean=mean,
        variance_diagonal=np.clip(diagonal, 0.0, None),
        rows={r: selected[index] for index, r in enumerate(rows)},
        eigenvalues=eigenvalues,
        eigenvectors=eigenvectors,
        iterations=iterations,
        seed=seed,
    )
