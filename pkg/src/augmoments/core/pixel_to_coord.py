"""Center-anchored continuous coordinates of pixel centers.

Pixel (i, j) sits at x = (j + 0.5) / width - 0.5, y = (i + 0.5) / height - 0.5,
so the image center is the origin and coordinates lie in [-0.5, 0.5).
"""

# third party
import numpy as np

# local
from augmoments.errors import RangeError
from augmoments.models.grid import Grid

# Fractional indices closer than this to an integer are snapped onto it, so that
# identity warps reproduce grid points exactly despite the divide/multiply round trip.
SNAP_TOLERANCE = 1e-9


def _check_index(grid: Grid, i: int, j: int) -> None:
    if not (0 <= i < grid.height and 0 <= j < grid.width):
        raise RangeError(f"pixel ({i}, {j}) outside grid {grid}")


def pixel_to_coord(grid: Grid, i: int, j: int) -> tuple[float, float]:
    """Return the (x, y) coordinate of the center of pixel (i, j)."""
    _check_index(grid, i, j)
    return ((j + 0.5) / grid.width - 0.5, (i + 0.5) / grid.height - 0.5)


def coord_to_fractional(coord: np.ndarray | float, size: int) -> np.ndarray:
    """Map coordinates along an axis of `size` pixels to fractional pixel indices."""
    fractional = (np.asarray(coord, dtype=np.float64) + 0.5) * size - 0.5
    nearest = np.rint(fractional)
    return np.where(np.abs(fractional - nearest) < SNAP_TOLERANCE, nearest, fractional)


def coord_to_pixel(grid: Grid, x: float, y: float) -> tuple[int, int]:
    """Inverse of pixel_to_coord for coordinates at pixel centers."""
    i = int(np.rint(coord_to_fractional(y, grid.height)))
    j = int(np.rint(coord_to_fractional(x, grid.width)))
    _check_index(grid, i, j)
    return i, j
