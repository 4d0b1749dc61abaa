"""Symmetric eigendecomposition of an augmentation variance."""

# third party
import numpy as np
from scipy.linalg import eigh

# local
from augmoments.errors import ArgumentError, ShapeError
from augmoments.models.spectral import SpectralFactor
from augmoments.utils import get_default_logger

RANK_TOLERANCE = 1e-10
SYMMETRY_TOLERANCE = 1e-10


def fix_signs(vectors: np.ndarray) -> np.ndarray:
    """Flip columns so the first nonzero coefficient of each is positive."""
    if vectors.size == 0:
        return vectors
    magnitude = np.abs(vectors)
    first = np.argmax(magnitude > 1e-12 * magnitude.max(axis=0, keepdims=True), axis=0)
    signs = np.sign(vectors[first, np.arange(vectors.shape[1])])
    signs[signs == 0] = 1.0
    return vectors * signs


def numerical_rank(eigenvalues: np.ndarray, tolerance: float = RANK_TOLERANCE) -> int:
    """Count of eigenvalues above tolerance * lambda_max (0 when lambda_max <= 0)."""
    if eigenvalues.size == 0 or eigenvalues[0] <= 0:
        return 0
    return int(np.count_nonzero(eigenvalues > tolerance * eigenvalues[0]))


def eig_sym(sigma: np.ndarray, tolerance: float = RANK_TOLERANCE) -> SpectralFactor:
    """Eigenpairs sorted descending, negatives clamped to 0, rank and tangent factor.

    Args:
        sigma: Symmetric D x D matrix.
        tolerance: Relative threshold on lambda / lambda_max for the numerical rank.

    Returns:
        SpectralFactor with deterministic eigenvector signs.

    Raises:
        ShapeError: If sigma is not square.
        ArgumentError: If sigma has non-finite entries or is not symmetric to 1e-10.
    """
    sigma = np.asarray(sigma, dtype=np.float64)
    if sigma.ndim != 2 or sigma.shape[0] != sigma.shape[1]:
        raise ShapeError(f"expected a square matrix, got shape {sigma.shape}")
    if not np.all(np.isfinite(sigma)):
        raise ArgumentError("matrix has non-finite entries")
    asymmetry = float(np.max(np.abs(sigma - sigma.T))) if sigma.size else 0.0
    if asymmetry > SYMMETRY_TOLERANCE:
        raise ArgumentError(f"matrix is not symmetric: max |S - S^T| = {asymmetry:.3e} > {SYMMETRY_TOLERANCE:g}")

    values, vectors = eigh(0.5 * (sigma + sigma.T))
    values = values[::-1].copy()
    vectors = fix_signs(vectors[:, ::-1])

    logger = get_default_logger()
    lambda_max = max(float(values[0]), 0.0) if values.size else 0.0
    if values.size and values[-1] < -1e-8 * lambda_max:
        logger.warning(f"eig_sym: clamping eigenvalue {values[-1]:.3e} below -1e-8 * lambda_max")
    values = np.clip(values, 0.0, None)
    rank = numerical_rank(values, tolerance)
    logger.debug(f"eig_sym: D={values.size}, lambda_max={lambda_max:.6e}, rank={rank} at tolerance {tolerance:g}")
    return SpectralFactor(
        eigenvalues=values,
        eigenvectors=vectors,
        rank=rank,
        tangent=vectors[:, :rank] * np.sqrt(values[:rank]),
        tolerance=tolerance,
    )
