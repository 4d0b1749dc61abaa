# third party
import numpy as np

# local
from augmoments.losses._checks import as_vector
from augmoments.models.losses import LinearModel


def mse_output_grad(model: LinearModel, mean: np.ndarray, target: np.ndarray) -> np.ndarray:
    """Gradient of ||y - z||^2 with respect to the model output z, at z = W mu + b."""
    mean = as_vector(mean, model.inputs, "mean")
    target = as_vector(target, model.outputs, "target")
    return -2.0 * (target - model.predict(mean))


def mse_grad_at_mean(model: LinearModel, mean: np.ndarray, target: np.ndarray) -> np.ndarray:
    """Gradient of ||y - W x - b||^2 with respect to x, at x = mu: -2 W^T (y - W mu - b)."""
    return model.weights.T @ mse_output_grad(model, mean, target)
