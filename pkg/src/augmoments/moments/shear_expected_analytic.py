"""Expected sheared image as row-wise (or column-wise) 1-D convolutions.

Along a row at transverse coordinate v the horizontal shear is a translation
by theta * v, so the row is convolved with the kernel of the density rescaled
by v. Rows within half a pixel of the anchor line do not move.
"""

# stdlib
from typing import Literal

# third party
import numpy as np

# local
from augmoments.distribution.scale import scale_distribution
from augmoments.errors import ArgumentError
from augmoments.models.distribution import ParamDistribution, Product
from augmoments.models.grid import Image
from augmoments.moments.pixel_kernel import kernel_matrix


def _shear_lines(lines: np.ndarray, dist, transverse: np.ndarray, length: int, half_pitch: float) -> np.ndarray:
    out = lines.copy()
    for index, t in enumerate(transverse):
        if abs(t) < half_pitch:
            continue
        out[index] = kernel_matrix(scale_distribution(dist, t * length), length) @ lines[index]
    return out


def shear_expected_analytic(
    img: Image, dist: ParamDistribution, axis: Literal["horizontal", "vertical"] = "horizontal"
) -> Image:
    if isinstance(dist, Product):
        raise ArgumentError(f"shear_expected_analytic takes a scalar distribution, got {dist}")
    height, width = img.grid.shape
    array = img.to_array()
    if axis == "horizontal":
        v = (np.arange(height) + 0.5) / height - 0.5
        return Image.from_array(_shear_lines(array, dist, v, width, 0.5 / height))
    if axis == "vertical":
        u = (np.arange(width) + 0.5) / width - 0.5
        return Image.from_array(_shear_lines(array.T, dist, u, height, 0.5 / width).T)
    raise ArgumentError(f"axis must be 'horizontal' or 'vertical', got {axis!r}")
