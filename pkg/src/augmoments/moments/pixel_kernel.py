"""Exact discrete kernels seen by bilinear sampling under a random shift.

For a shift s (in pixels) with distribution p, the weight that target pixel j
puts on source pixel j - d is E[hat(d - s)], hat(t) = max(0, 1 - |t|). With
G(a) = E[(a - s)_+], the second antiderivative of p, this equals the second
difference G(d + 1) - 2 G(d) + G(d - 1), which has closed forms for every
scalar family.
"""

# third party
import numpy as np
from scipy.stats import norm

# local
from augmoments.models.distribution import Dirac, Gaussian, Uniform

# Kernel entries below this are dropped; they only carry cancellation noise.
KERNEL_CUTOFF = 1e-16


def ramp_expectation(dist: Gaussian | Uniform | Dirac, a: np.ndarray) -> np.ndarray:
    """G(a) = E[(a - s)_+]."""
    a = np.asarray(a, dtype=np.float64)
    if isinstance(dist, Gaussian):
        z = (a - dist.mean) / dist.std
        return (a - dist.mean) * norm.cdf(z) + dist.std * norm.pdf(z)
    if isinstance(dist, Uniform):
        width = dist.hi - dist.lo
        inside = np.clip(a - dist.lo, 0.0, width)
        return np.where(a >= dist.hi, a - 0.5 * (dist.lo + dist.hi), inside**2 / (2.0 * width))
    return np.maximum(a - dist.at, 0.0)


def pixel_kernel(shift: Gaussian | Uniform | Dirac, offsets: np.ndarray) -> np.ndarray:
    """K(d) = E[hat(d - s)] at integer offsets d, for a shift distribution in pixel units."""
    d = np.asarray(offsets, dtype=np.float64)
    kernel = ramp_expectation(shift, d + 1.0) - 2.0 * ramp_expectation(shift, d) + ramp_expectation(shift, d - 1.0)
    return np.where(kernel < KERNEL_CUTOFF, 0.0, kernel)


def kernel_matrix(shift: Gaussian | Uniform | Dirac, size: int) -> np.ndarray:
    """size x size Toeplitz matrix A with A[j, j'] = K(j - j') (zero-padded 1-D convolution)."""
    offsets = np.arange(size)
    difference = offsets[:, None] - offsets[None, :]
    values = pixel_kernel(shift, np.arange(-(size - 1), size))
    return values[difference + size - 1]


def square_ramp_expectation(dist: Gaussian | Uniform | Dirac, a: np.ndarray) -> np.ndarray:
    """H(a) = E[(a - s)_+^2]."""
    a = np.asarray(a, dtype=np.float64)
    if isinstance(dist, Gaussian):
        w = a - dist.mean
        z = w / dist.std
        return (w**2 + dist.std**2) * norm.cdf(z) + w * dist.std * norm.pdf(z)
    if isinstance(dist, Uniform):
        width = dist.hi - dist.lo
        return (np.maximum(a - dist.lo, 0.0) ** 3 - np.maximum(a - dist.hi, 0.0) ** 3) / (3.0 * width)
    return np.maximum(a - dist.at, 0.0) ** 2


def pair_kernels(shift: Gaussian | Uniform | Dirac, offsets: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """(E[hat(d - s)^2], E[hat(d - s) hat(d + 1 - s)]) at integer offsets d.

    These are the only nonzero products of two bilinear weights along one axis:
    hat^2(t) = (t + 1)_+^2 - 4 t_+ - (t - 1)_+^2 and, on the unit cell,
    f (1 - f) = t_+ - t_+^2 + (t - 1)_+ + (t - 1)_+^2 with t = d + 1 - s.
    """
    d = np.asarray(offsets, dtype=np.float64)
    ramp, square = ramp_expectation, square_ramp_expectation
    same = square(shift, d + 1.0) - 4.0 * ramp(shift, d) - square(shift, d - 1.0)
    cross = ramp(shift, d + 1.0) - square(shift, d + 1.0) + ramp(shift, d) + square(shift, d)
    return np.where(same < KERNEL_CUTOFF, 0.0, same), np.where(cross < KERNEL_CUTOFF, 0.0, cross)
