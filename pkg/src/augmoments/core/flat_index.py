"""Row-major flattening of pixel indices."""

# local
from augmoments.errors import RangeError
from augmoments.models.grid import Grid


def flat_index(grid: Grid, i: int, j: int) -> int:
    """k = i * width + j."""
    if not (0 <= i < grid.height and 0 <= j < grid.width):
        raise RangeError(f"pixel ({i}, {j}) outside grid {grid}")
    return i * grid.width + j


def unflatten(grid: Grid, k: int) -> tuple[int, int]:
    """(k // width, k % width)."""
    if not 0 <= k < grid.size:
        raise RangeError(f"flat index {k} outside [0, {grid.size})")
    return k // grid.width, k % grid.width
