"""Second moment of translated images from exact per-axis pair kernels.

Along one axis the bilinear operator is A(s)[j, c] = hat(j - c - s), so
E[A[j, c] A[j', c']] only depends on d = j - c and d' = j' - c' and vanishes
unless |d - d'| <= 1. The second moment is therefore a finite sum of
w (S u)(S' u)^T over pairs of zero-padded integer shifts S, S' of the image,
with weights given by `pair_kernels`. The two axes are independent.
"""

# stdlib
from typing import Literal

# third party
import numpy as np

# local
from augmoments.models.distribution import Dirac, Gaussian, ParamDistribution, Uniform
from augmoments.models.grid import Image
from augmoments.moments._checks import check_dense
from augmoments.moments.pixel_kernel import pair_kernels
from augmoments.moments.translation_expected_analytic import axis_shifts

TERMS_PER_GEMM = 256


def _shifted(array: np.ndarray, dy: int, dx: int) -> np.ndarray:
    height, width = array.shape
    out = np.zeros_like(array)
    out[max(dy, 0) : height + min(dy, 0), max(dx, 0) : width + min(dx, 0)] = array[
        max(-dy, 0) : height - max(dy, 0), max(-dx, 0) : width - max(dx, 0)
    ]
    return out


def axis_pair_terms(shift: Gaussian | Uniform | Dirac, size: int) -> list[tuple[int, int, float]]:
    """(d, d', E[hat(d - s) hat(d' - s)]) for every nonzero pair of offsets along one axis."""
    offsets = np.arange(-(size - 1), size)
    same, cross = pair_kernels(shift, offsets)
    terms = [(int(d), int(d), float(q)) for d, q in zip(offsets, same, strict=True) if q > 0]
    for d, q in zip(offsets[:-1], cross[:-1], strict=True):
        if q > 0:
            terms.extend([(int(d), int(d) + 1, float(q)), (int(d) + 1, int(d), float(q))])
    return terms


def translation_second_moment_analytic(
    img: Image, dist: ParamDistribution, axis: Literal["horizontal", "vertical"] | None = None
) -> np.ndarray:
    """E[T(x) T(x)^T] for translation, exact for the bilinear operator including the cross terms.

    A scalar distribution translates along one axis only and needs `axis`.
    """
    check_dense(img.grid)
    shift_x, shift_y = axis_shifts(dist, img.grid, axis)
    height, width = img.grid.shape
    terms = [
        (ay, ax, by, bx, qy * qx)
        for ay, by, qy in axis_pair_terms(shift_y, height)
        for ax, bx, qx in axis_pair_terms(shift_x, width)
    ]
    array = img.to_array()
    second = np.zeros((img.grid.size, img.grid.size))
    for start in range(0, len(terms), TERMS_PER_GEMM):
        block = terms[start : start + TERMS_PER_GEMM]
        left = np.stack([weight * _shifted(array, ay, ax).reshape(-1) for ay, ax, _, _, weight in block])
        right = np.stack([_shifted(array, by, bx).reshape(-1) for _, _, by, bx, _ in block])
        second += left.T @ right
    return 0.5 * (second + second.T)
