"""Synthetic fixtures: low-pass filtered noise and a sharp-edged square."""

# stdlib
import math

# third party
import numpy as np
from scipy.ndimage import convolve1d
from scipy.special import binom

# local
from augmoments.distribution.sample import make_rng
from augmoments.errors import ArgumentError
from augmoments.models.grid import Grid, Image


def binomial_kernel(width: int) -> np.ndarray:
    """Normalized binomial coefficients of length `width`."""
    coefficients = binom(width - 1, np.arange(width))
    return coefficients / coefficients.sum()


def synth_image(grid: Grid, seed: int, cutoff: float = 0.25) -> Image:
    """White noise smoothed by a separable binomial kernel of width ceil(1/cutoff), scaled to [0, 1]."""
    if not 0 < cutoff <= 1:
        raise ArgumentError(f"cutoff must lie in (0, 1], got {cutoff}")
    noise = make_rng(seed).standard_normal(grid.shape)
    kernel = binomial_kernel(math.ceil(1.0 / cutoff))
    smooth = convolve1d(convolve1d(noise, kernel, axis=0, mode="reflect"), kernel, axis=1, mode="reflect")
    low, high = smooth.min(), smooth.max()
    if high == low:
        return Image.zeros(grid)
    return Image.from_array((smooth - low) / (high - low))


def synth_square(grid: Grid, fraction: float = 0.5) -> Image:
    """Centered bright square covering `fraction` of each side on a dark background."""
    if not 0 < fraction <= 1:
        raise ArgumentError(f"fraction must lie in (0, 1], got {fraction}")
    array = np.zeros(grid.shape)
    side_y = max(1, round(grid.height * fraction))
    side_x = max(1, round(grid.width * fraction))
    top = (grid.height - side_y) // 2
    left = (grid.width - side_x) // 2
    array[top : top + side_y, left : left + side_x] = 1.0
    return Image.from_array(array)
