# local
from augmoments.errors import ArgumentError, RangeError, ShapeError
from augmoments.models.grid import Grid, Image
from augmoments.models.spectral import SpectralFactor


def top_eigvec_images(factor: SpectralFactor, grid: Grid, k: int) -> list[Image]:
    """The k leading eigenvectors reshaped onto `grid`, each with unit norm."""
    if k < 0:
        raise ArgumentError(f"k must be >= 0, got {k}")
    if k > factor.rank:
        raise RangeError(f"requested {k} eigenvectors but the variance has rank {factor.rank}")
    if factor.eigenvectors.shape[0] != grid.size:
        raise ShapeError(f"eigenvectors have length {factor.eigenvectors.shape[0]}, grid {grid} needs {grid.size}")
    return [Image(grid=grid, data=factor.eigenvectors[:, i]) for i in range(k)]
