"""Expected translated image as a separable discrete convolution."""

# stdlib
from typing import Literal

# local
from augmoments.distribution.scale import scale_distribution
from augmoments.errors import ArgumentError
from augmoments.models.distribution import Dirac, ParamDistribution, Product
from augmoments.models.grid import Image
from augmoments.moments.pixel_kernel import kernel_matrix


def axis_shifts(dist: ParamDistribution, grid, axis: Literal["horizontal", "vertical"] | None = None):
    """Per-axis shift distributions in pixels, (along x, along y)."""
    if isinstance(dist, Product):
        if axis is not None:
            raise ArgumentError(f"axis applies to scalar translation distributions, got {dist}")
        return scale_distribution(dist.first, grid.width), scale_distribution(dist.second, grid.height)
    if axis == "horizontal":
        return scale_distribution(dist, grid.width), Dirac(at=0.0)
    if axis == "vertical":
        return Dirac(at=0.0), scale_distribution(dist, grid.height)
    raise ArgumentError(f"translation needs a prod(a,b) distribution or a scalar one with an axis, got {dist}")


def translation_expected_analytic(
    img: Image, dist: ParamDistribution, axis: Literal["horizontal", "vertical"] | None = None
) -> Image:
    """E[T(x)] for translation, computed as K_y X K_x^T with exact pixel kernels.

    A scalar distribution translates along one axis only and needs `axis`.
    """
    shift_x, shift_y = axis_shifts(dist, img.grid, axis)
    along_x = kernel_matrix(shift_x, img.grid.width)
    along_y = kernel_matrix(shift_y, img.grid.height)
    return Image.from_array(along_y @ img.to_array() @ along_x.T)
