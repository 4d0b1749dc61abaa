"""Coordinate-space warp T(u, v) = I(t(u, v)), evaluated without materializing M(theta)."""

# third party
import numpy as np

# local
from augmoments.core import coord_to_fractional
from augmoments.models.grid import Grid, Image
from augmoments.models.transform import TransformKind
from augmoments.transform.bilinear import bilinear_stencil, target_coords
from augmoments.Warps import get_warp


def _warp_data(kind: TransformKind | str, theta, img: Image) -> np.ndarray:
    warp = get_warp(kind)
    u, v = target_coords(img.grid)
    src_x, src_y = warp.source(warp.as_theta(theta), u, v)
    rows, cols, weights = bilinear_stencil(img.grid, src_x, src_y)
    return np.bincount(rows, weights=weights * img.data[cols], minlength=img.grid.size)


def reference_transform(kind: TransformKind | str, theta, img: Image) -> Image:
    """Warp `img` by t_theta with bilinear interpolation and zero padding."""
    return Image(grid=img.grid, data=_warp_data(kind, theta, img))


def transform_stack(kind: TransformKind | str, thetas: np.ndarray, img: Image) -> np.ndarray:
    """Transformed images for each row of `thetas`, stacked as an (n, D) array."""
    thetas = np.asarray(thetas, dtype=np.float64)
    if thetas.ndim == 1:
        thetas = thetas[:, None]
    stack = np.empty((thetas.shape[0], img.grid.size))
    for k, theta in enumerate(thetas):
        stack[k] = _warp_data(kind, theta, img)
    return stack


def warp_batch(kind: TransformKind | str, thetas: np.ndarray, pixels: np.ndarray, grid: Grid) -> np.ndarray:
    """Warp row n of `pixels` by row n of `thetas`, all pairs at once; returns an (m, D) array."""
    warp = get_warp(kind)
    thetas = np.asarray(thetas, dtype=np.float64).reshape(len(pixels), -1)
    for theta in thetas:
        warp.as_theta(theta)
    u, v = target_coords(grid)
    src_x, src_y = warp.source(thetas.T[:, :, None], u, v)
    fi = coord_to_fractional(src_y, grid.height)
    fj = coord_to_fractional(src_x, grid.width)
    i0 = np.floor(fi)
    j0 = np.floor(fj)
    a = fi - i0
    b = fj - j0

    batch = np.arange(len(pixels))[:, None]
    out = np.zeros((len(pixels), grid.size))
    for di, wi in ((0, 1.0 - a), (1, a)):
        for dj, wj in ((0, 1.0 - b), (1, b)):
            ii = (i0 + di).astype(np.int64)
            jj = (j0 + dj).astype(np.int64)
            inside = (ii >= 0) & (ii < grid.height) & (jj >= 0) & (jj < grid.width)
            flat = np.where(inside, ii * grid.width + jj, 0)
            out += np.where(inside, wi * wj, 0.0) * pixels[batch, flat]
    return out
