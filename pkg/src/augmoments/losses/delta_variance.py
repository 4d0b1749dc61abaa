"""First-order (delta method) variance of a loss under augmentation."""

# third party
import numpy as np
from scipy.linalg import eigvalsh

# local
from augmoments.errors import NumericalError
from augmoments.losses._checks import as_matrix, as_vector

# Quadratic forms down to -PSD_TOLERANCE * lambda_max * ||grad||^2 are rounding noise.
PSD_TOLERANCE = 1e-8


def delta_variance(grad: np.ndarray, sigma: np.ndarray) -> float:
    """grad^T Sigma grad, for the gradient of the loss at the expected image.

    The quadratic form is taken on the gradient as supplied, so the caller's
    convention (including any constant factor) carries through.
    """
    sigma = as_matrix(sigma, (None, None), "sigma")
    sigma = as_matrix(sigma, (sigma.shape[1], None), "sigma")
    grad = as_vector(grad, sigma.shape[0], "grad")
    value = float(grad @ sigma @ grad)
    if value >= 0.0:
        return value
    size = sigma.shape[0]
    lambda_max = float(eigvalsh(0.5 * (sigma + sigma.T), subset_by_index=[size - 1, size - 1])[0])
    if value < -PSD_TOLERANCE * max(lambda_max, 0.0) * float(grad @ grad):
        raise NumericalError(f"grad^T Sigma grad = {value:.3e} is negative; sigma is not PSD")
    return 0.0
