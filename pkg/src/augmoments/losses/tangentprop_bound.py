# third party
import numpy as np
from scipy.linalg import eigvalsh

# local
from augmoments.losses._checks import as_matrix


def tangentprop_bound(
    loss_at_mean: float, hessian_out: np.ndarray, jac: np.ndarray, tangent: np.ndarray
) -> tuple[float, float]:
    """Upper bound L(mu) + kappa ||J tangent||_F^2 on the Taylor expected loss.

    kappa is half the largest eigenvalue of the loss Hessian in output space,
    clamped at 0. Returns (bound, kappa).
    """
    jac = as_matrix(jac, (None, None), "jac")
    hessian_out = as_matrix(hessian_out, (jac.shape[0], jac.shape[0]), "hessian_out")
    tangent = as_matrix(tangent, (jac.shape[1], None), "tangent")
    kappa = max(0.5 * float(eigvalsh(0.5 * (hessian_out + hessian_out.T))[-1]), 0.0)
    return float(loss_at_mean) + kappa * float(np.sum((jac @ tangent) ** 2)), kappa
