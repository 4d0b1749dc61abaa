"""Minimizer of the expected squared error over linear models."""

# stdlib
import warnings
from typing import Literal

# third party
import numpy as np
from scipy.linalg import LinAlgError, LinAlgWarning, solve

# local
from augmoments.errors import ArgumentError, NumericalError, ShapeError
from augmoments.losses.expected_mse import variance_term
from augmoments.models.losses import AugmentedDataset, LinearModel, SolveDiagnostics
from augmoments.utils import get_default_logger

JITTER_SCALE = 1e-10


def _try_solve(gram: np.ndarray, rhs: np.ndarray) -> np.ndarray | None:
    with warnings.catch_warnings():
        warnings.simplefilter("error", LinAlgWarning)
        try:
            return solve(gram, rhs, assume_a="pos")
        except (LinAlgError, LinAlgWarning):
            return None


def _solve_spd(gram: np.ndarray, rhs: np.ndarray) -> tuple[np.ndarray, float, float]:
    """Solve gram @ X = rhs for symmetric positive definite gram; returns (X, condition, jitter)."""
    logger = get_default_logger()
    trace = float(np.trace(gram))
    if not trace > 0:
        raise NumericalError("regularized Gram matrix is zero; the expected loss does not depend on W")
    condition = float(np.linalg.cond(gram))
    logger.debug(f"optimal_linear: Gram matrix {gram.shape[0]}x{gram.shape[0]}, condition number {condition:.3e}")

    if condition < 1.0 / np.finfo(np.float64).eps:
        solution = _try_solve(gram, rhs)
        if solution is not None:
            return solution, condition, 0.0

    jitter = JITTER_SCALE * trace / gram.shape[0]
    logger.warning(f"optimal_linear: solve failed (condition {condition:.3e}); adding ridge jitter {jitter:.3e}")
    solution = _try_solve(gram + jitter * np.eye(gram.shape[0]), rhs)
    if solution is None:
        raise NumericalError(
            f"regularized Gram matrix is singular (condition number {condition:.3e}) even after jitter {jitter:.3e}",
            condition_number=condition,
        )
    return solution, condition, jitter


def optimal_linear(
    data: AugmentedDataset,
    mode: Literal["joint", "fixed-bias"] = "joint",
    bias: np.ndarray | None = None,
) -> LinearModel:
    """W (and b) minimizing `expected_mse`.

    In joint mode the bias is optimal too: with centered means and targets,
    W = [sum (y_n - y_bar)(mu_n - mu_bar)^T] [sum (mu_n - mu_bar)(mu_n - mu_bar)^T + sum Sigma_n]^-1
    and b = y_bar - W mu_bar. In fixed-bias mode b is given (zero by default) and
    W = [sum (y_n - b) mu_n^T] [sum mu_n mu_n^T + sum Sigma_n]^-1.

    Raises:
        NumericalError: If the regularized Gram matrix stays singular after jitter.
    """
    variance = variance_term(data)
    if mode == "joint":
        if bias is not None:
            raise ArgumentError("bias is only accepted in fixed-bias mode")
        mean_input = data.means.mean(axis=0)
        mean_target = data.targets.mean(axis=0)
        centered = data.means - mean_input
        gram = centered.T @ centered + variance
        cross = (data.targets - mean_target).T @ centered
    elif mode == "fixed-bias":
        bias = np.zeros(data.outputs) if bias is None else np.asarray(bias, dtype=np.float64)
        if bias.shape != (data.outputs,):
            raise ShapeError(f"bias has shape {bias.shape}, expected ({data.outputs},)")
        gram = data.means.T @ data.means + variance
        cross = (data.targets - bias).T @ data.means
    else:
        raise ArgumentError(f"mode must be 'joint' or 'fixed-bias', got {mode!r}")

    solution, condition, jitter = _solve_spd(0.5 * (gram + gram.T), cross.T)
    weights = solution.T
    if mode == "joint":
        bias = mean_target - weights @ mean_input
    return LinearModel(
        weights=weights,
        bias=bias,
        diagnostics=SolveDiagnostics(condition_number=condition, jitter=jitter, mode=mode),
    )
