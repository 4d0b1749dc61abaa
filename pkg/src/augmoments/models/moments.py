"""Records for augmentation moments: expected operator, dense moment set, streamed moments."""

# third party
import numpy as np
import scipy.sparse as sparse
from pydantic import BaseModel, ConfigDict, Field, model_validator

# local
from augmoments.models.grid import Grid, Image


class ExpectedOperator(BaseModel):
    """E[M(theta)]: applied to an image it yields the expected augmented image."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    grid: Grid = Field(..., description="Grid the operator acts on.")
    matrix: sparse.csr_matrix = Field(..., description="D x D sparse expected operator.")

    @model_validator(mode="after")
    def _check_shape(self) -> "ExpectedOperator":
        if self.matrix.shape != (self.grid.size, self.grid.size):
            raise ValueError(f"operator shape {self.matrix.shape} does not match grid {self.grid}")
        return self

    def row_sums(self) -> np.ndarray:
        return np.asarray(self.matrix.sum(axis=1)).reshape(-1)

    def to_dense(self) -> np.ndarray:
        return self.matrix.toarray()


class MomentSet(BaseModel):
    """First and second moments of T(x) for one image."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    grid: Grid = Field(..., description="Grid of the augmented image.")
    mean: np.ndarray = Field(..., description="E[T(x)], length D.")
    second: np.ndarray = Field(..., description="E[T(x) T(x)^T], D x D symmetric.")
    variance: np.ndarray = Field(..., description="V[T(x)], D x D symmetric PSD.")

    @model_validator(mode="after")
    def _check_shapes(self) -> "MomentSet":
        size = self.grid.size
        if self.mean.shape != (size,):
            raise ValueError(f"mean has shape {self.mean.shape}, expected ({size},)")
        for name in ("second", "variance"):
            if getattr(self, name).shape != (size, size):
                raise ValueError(f"{name} has shape {getattr(self, name).shape}, expected ({size}, {size})")
        return self

    @property
    def mean_image(self) -> Image:
        return Image(grid=self.grid, data=self.mean)

    @property
    def pixel_variance(self) -> Image:
        """Diagonal of the variance reshaped onto the grid."""
        return Image(grid=self.grid, data=np.clip(np.diag(self.variance), 0.0, None))


class StreamingMoments(BaseModel):
    """Reduced moments for grids too large for a dense D x D variance."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    grid: Grid = Field(..., description="Grid of the augmented image.")
    mean: np.ndarray = Field(..., description="E[T(x)], length D.")
    variance_diagonal: np.ndarray = Field(..., description="diag V[T(x)], length D.")
    rows: dict[int, np.ndarray] = Field(default_factory=dict, description="Selected rows of V[T(x)] by flat index.")
    eigenvalues: np.ndarray = Field(..., description="Top-r eigenvalues, descending.")
    eigenvectors: np.ndarray = Field(..., description="D x r orthonormal eigenvectors.")
    iterations: int = Field(..., description="Subspace iterations performed.")
    seed: int = Field(..., description="Seed of the random starting subspace.")
