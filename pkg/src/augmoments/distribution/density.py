"""Pointwise density p(theta)."""

# third party
import numpy as np
from scipy.stats import norm

# local
from augmoments.errors import ArgumentError, UnsupportedOperationError
from augmoments.models.distribution import Dirac, Gaussian, ParamDistribution, Product, Uniform


def _scalar_density(dist: Gaussian | Uniform | Dirac, theta: np.ndarray) -> np.ndarray:
    if isinstance(dist, Gaussian):
        return norm.pdf(theta, loc=dist.mean, scale=dist.std)
    if isinstance(dist, Uniform):
        inside = (theta >= dist.lo) & (theta <= dist.hi)
        return np.where(inside, 1.0 / (dist.hi - dist.lo), 0.0)
    raise UnsupportedOperationError(f"{dist} has no density function")


def density(dist: ParamDistribution, theta) -> float | np.ndarray:
    """Density at theta (a scalar or a pair for products); vectorized over leading axes."""
    values = np.asarray(theta, dtype=np.float64)
    if isinstance(dist, Product):
        if values.shape[-1:] != (2,):
            raise ArgumentError(f"{dist} needs a parameter pair, got shape {values.shape}")
        result = _scalar_density(dist.first, values[..., 0]) * _scalar_density(dist.second, values[..., 1])
    else:
        result = _scalar_density(dist, values)
    return float(result) if np.ndim(result) == 0 else result
