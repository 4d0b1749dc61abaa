# third party
import numpy as np

# local
from augmoments.losses._checks import as_matrix


def taylor_expected_loss(loss_at_mean: float, hessian: np.ndarray, sigma: np.ndarray) -> float:
    """Second-order expected loss: L(mu) + 1/2 Tr(H Sigma). Exact for a linear model with MSE."""
    hessian = as_matrix(hessian, (None, None), "hessian")
    sigma = as_matrix(sigma, hessian.shape, "sigma")
    return float(loss_at_mean) + 0.5 * float(np.sum(hessian * sigma.T))
