"""Closed-form expected squared error of a linear model under augmentation.

For f(x) = W x + b,
    E_theta ||y_n - f(T(x_n))||^2 = ||y_n - W mu_n - b||^2 + Tr(W^T W Sigma_n),
so the data term uses the means and the regularizer only needs sum_n Sigma_n.
"""

# third party
import numpy as np

# local
from augmoments.losses._checks import check_model_data
from augmoments.models.losses import AugmentedDataset, LinearModel


def variance_term(data: AugmentedDataset) -> np.ndarray:
    """sum_n Sigma_n, rebuilt from the tangent factors when they are carried."""
    if data.tangents is not None:
        return sum((t @ t.T for t in data.tangents), start=np.zeros((data.dim, data.dim)))
    return data.variance_sum


def expected_mse(model: LinearModel, data: AugmentedDataset) -> float:
    """Sum over samples of the expected squared error.

    The regularizer is ||W tangent_n||_F^2 summed over samples when the dataset
    carries tangent factors, and Tr(W Sigma W^T) on the pooled variance otherwise.
    """
    check_model_data(model, data)
    residual = data.targets - model.predict(data.means)
    fit = float(np.sum(residual**2))
    if data.tangents is not None:
        regularizer = float(sum(np.sum((model.weights @ t) ** 2) for t in data.tangents))
    else:
        regularizer = float(np.sum((model.weights @ data.variance_sum) * model.weights))
    return max(fit + regularizer, 0.0)


def expected_mse_grad(model: LinearModel, data: AugmentedDataset) -> tuple[np.ndarray, np.ndarray]:
    """Gradient (dL/dW, dL/db) of `expected_mse`."""
    check_model_data(model, data)
    residual = data.targets - model.predict(data.means)
    grad_weights = -2.0 * residual.T @ data.means + 2.0 * model.weights @ variance_term(data)
    grad_bias = -2.0 * residual.sum(axis=0)
    return grad_weights, grad_bias
