"""Expected augmented image E[T(x)] = E[M(theta)] x."""

# local
from augmoments.errors import ShapeError
from augmoments.models.grid import Image
from augmoments.models.moments import ExpectedOperator


def expected_image(op: ExpectedOperator, img: Image) -> Image:
    if op.grid != img.grid:
        raise ShapeError(f"operator grid {op.grid} does not match image grid {img.grid}")
    return Image(grid=img.grid, data=op.matrix @ img.data)
