"""Top eigenpairs of a symmetric PSD operator known only through products."""

# stdlib
from collections.abc import Callable

# third party
import numpy as np
from scipy.linalg import eigh, qr

# local
from augmoments.distribution.sample import make_rng
from augmoments.errors import ArgumentError
from augmoments.spectral.eig_sym import fix_signs

OVERSAMPLING = 8


def subspace_iteration(
    matvec: Callable[[np.ndarray], np.ndarray],
    dim: int,
    rank: int,
    iterations: int = 20,
    seed: int = 0,
) -> tuple[np.ndarray, np.ndarray]:
    """Block power iteration with a Rayleigh-Ritz step.

    `matvec` maps a dim x p block to A @ block. The start block is Gaussian from
    a Philox generator seeded with `seed`, so the result is reproducible.

    Returns:
        (eigenvalues, eigenvectors): the top `rank` pairs, descending, eigenvectors as columns.
    """
    if not 1 <= rank <= dim:
        raise ArgumentError(f"rank must be in [1, {dim}], got {rank}")
    if iterations < 1:
        raise ArgumentError(f"iterations must be >= 1, got {iterations}")
    width = min(dim, rank + OVERSAMPLING)
    basis, _ = qr(make_rng(seed).standard_normal((dim, width)), mode="economic")
    for _ in range(iterations):
        basis, _ = qr(matvec(basis), mode="economic")

    projected = basis.T @ matvec(basis)
    values, vectors = eigh(0.5 * (projected + projected.T))
    order = np.argsort(values)[::-1][:rank]
    return np.clip(values[order], 0.0, None), fix_signs(basis @ vectors[:, order])
