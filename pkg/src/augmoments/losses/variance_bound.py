"""Cauchy-Schwarz bound on the loss variance and the Jacobian-kernel alignment case."""

# stdlib
from typing import Literal

# third party
import numpy as np
from scipy.linalg import qr

# local
from augmoments.errors import ArgumentError
from augmoments.losses._checks import as_matrix, as_vector


def variance_bound(
    grad_out: np.ndarray, jac: np.ndarray, tangent: np.ndarray, power: Literal[2, 4] = 2
) -> float:
    """||grad_out||^2 ||J tangent||_F^2, or both factors squared again with power=4.

    Args:
        grad_out: Loss gradient at the model output (length K).
        jac: Model Jacobian (K x D); W for a linear model.
        tangent: Tangent factor Q Lambda^{1/2} (D x r).
        power: 2 bounds grad^T Sigma grad with grad = J^T grad_out; 4 bounds its square.
    """
    jac = as_matrix(jac, (None, None), "jac")
    grad_out = as_vector(grad_out, jac.shape[0], "grad_out")
    tangent = as_matrix(tangent, (jac.shape[1], None), "tangent")
    if power not in (2, 4):
        raise ArgumentError(f"power must be 2 or 4, got {power}")
    bound = float(grad_out @ grad_out) * float(np.sum((jac @ tangent) ** 2))
    return bound if power == 2 else bound**2


def align_jacobian_kernel(jac: np.ndarray, tangent: np.ndarray) -> np.ndarray:
    """J (I - Q Q^T), Q an orthonormal basis of span(tangent): the tangent space lies in the kernel."""
    jac = as_matrix(jac, (None, None), "jac")
    tangent = as_matrix(tangent, (jac.shape[1], None), "tangent")
    if tangent.shape[1] == 0:
        return jac.copy()
    basis, _ = qr(tangent, mode="economic")
    return jac - (jac @ basis) @ basis.T
