"""Apply a sparse operator to an image."""

# local
from augmoments.errors import ShapeError
from augmoments.models.grid import Image
from augmoments.models.transform import SparseOperator


def apply_operator(op: SparseOperator, img: Image) -> Image:
    """Sparse matrix-vector product M x on the operator's grid."""
    if op.grid != img.grid:
        raise ShapeError(f"operator grid {op.grid} does not match image grid {img.grid}")
    return Image(grid=img.grid, data=op.matrix @ img.data)
