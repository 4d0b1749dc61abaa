"""Transform kinds and the sparse data-space operator M(theta)."""

# stdlib
from enum import StrEnum

# third party
import numpy as np
import scipy.sparse as sparse
from pydantic import BaseModel, ConfigDict, Field, model_validator

# local
from augmoments.models.grid import Grid


class TransformKind(StrEnum):
    """Transform families; values double as CLI names."""

    TRANSLATION = "translation"
    SHEAR_HORIZONTAL = "shear-horizontal"
    SHEAR_VERTICAL = "shear-vertical"
    SHEAR = "shear"
    ROTATION = "rotation"
    ZOOM = "zoom"

    @property
    def arity(self) -> int:
        """Number of scalar parameters in theta."""
        return 2 if self in (TransformKind.TRANSLATION, TransformKind.SHEAR) else 1


class SparseOperator(BaseModel):
    """Data-space operator M(theta): row r of the matrix produces target pixel r."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    grid: Grid = Field(..., description="Grid the operator acts on.")
    matrix: sparse.csr_matrix = Field(..., description="D x D CSR matrix of bilinear weights.")

    @model_validator(mode="after")
    def _check_shape(self) -> "SparseOperator":
        size = self.grid.size
        if self.matrix.shape != (size, size):
            raise ValueError(f"operator shape {self.matrix.shape} does not match grid {self.grid}")
        return self

    @property
    def entries(self) -> list[tuple[int, int, float]]:
        """Nonzero (row, col, weight) triples in row-major order."""
        coo = self.matrix.tocoo()
        order = np.lexsort((coo.col, coo.row))
        return [(int(coo.row[k]), int(coo.col[k]), float(coo.data[k])) for k in order]

    @property
    def nnz(self) -> int:
        return int(self.matrix.nnz)

    def row_sums(self) -> np.ndarray:
        return np.asarray(self.matrix.sum(axis=1)).reshape(-1)

    def to_dense(self) -> np.ndarray:
        return self.matrix.toarray()
