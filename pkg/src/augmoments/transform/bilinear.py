"""Bilinear stencil shared by operator construction and direct warping.

Neighbors outside the grid read a zero-extended image: their weight is dropped,
so rows whose source point leaves the hull of pixel centers sum to less than 1.
"""

# stdlib
from functools import lru_cache

# third party
import numpy as np

# local
from augmoments.core import coord_to_fractional
from augmoments.models.grid import Grid


@lru_cache(maxsize=32)
def _target_coords(height: int, width: int) -> tuple[np.ndarray, np.ndarray]:
    rows, cols = np.divmod(np.arange(height * width), width)
    u = (cols + 0.5) / width - 0.5
    v = (rows + 0.5) / height - 0.5
    u.setflags(write=False)
    v.setflags(write=False)
    return u, v


def target_coords(grid: Grid) -> tuple[np.ndarray, np.ndarray]:
    """(u, v) coordinates of every target pixel, in flat-index order."""
    return _target_coords(grid.height, grid.width)


def bilinear_stencil(grid: Grid, src_x: np.ndarray, src_y: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Return (rows, cols, weights) of the nonzero bilinear weights, row r reading (src_x[r], src_y[r])."""
    fi = coord_to_fractional(src_y, grid.height)
    fj = coord_to_fractional(src_x, grid.width)
    i0 = np.floor(fi)
    j0 = np.floor(fj)
    a = fi - i0
    b = fj - j0
    targets = np.arange(grid.size)

    rows, cols, weights = [], [], []
    for di, wi in ((0, 1.0 - a), (1, a)):
        for dj, wj in ((0, 1.0 - b), (1, b)):
            ii = i0 + di
            jj = j0 + dj
            weight = wi * wj
            keep = (weight > 0) & (ii >= 0) & (ii < grid.height) & (jj >= 0) & (jj < grid.width)
            rows.append(targets[keep])
            cols.append(ii[keep].astype(np.int64) * grid.width + jj[keep].astype(np.int64))
            weights.append(weight[keep])
    return np.concatenate(rows), np.concatenate(cols), np.concatenate(weights)


def axis_stencil(size: int, shift: float) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """1-D linear-interpolation stencil of a shift by `shift` (normalized units) along an axis."""
    coords = (np.arange(size) + 0.5) / size - 0.5
    fractional = coord_to_fractional(coords - shift, size)
    k0 = np.floor(fractional)
    a = fractional - k0
    targets = np.arange(size)
    rows, cols, weights = [], [], []
    for dk, weight in ((0, 1.0 - a), (1, a)):
        kk = k0 + dk
        keep = (weight > 0) & (kk >= 0) & (kk < size)
        rows.append(targets[keep])
        cols.append(kk[keep].astype(np.int64))
        weights.append(weight[keep])
    return np.concatenate(rows), np.concatenate(cols), np.concatenate(weights)
