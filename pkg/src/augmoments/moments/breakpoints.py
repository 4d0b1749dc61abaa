"""Parameter values where transformed pixels are kinked functions of theta.

Bilinear weights are piecewise linear in the source position, with kinks where
a source point crosses a pixel-center line. Splitting quadrature panels at those
parameter values makes every panel integrand smooth.
"""

# stdlib
import math

# third party
import numpy as np

# local
from augmoments.distribution.quadrature import DEFAULT_NODES, quadrature, support
from augmoments.models.distribution import Dirac, ParamDistribution, Product, QuadratureRule
from augmoments.models.grid import Grid
from augmoments.models.transform import TransformKind


def _multiples(dist, step: float) -> np.ndarray | None:
    if isinstance(dist, Dirac):
        return None
    lo, hi = support(dist)
    first, last = math.ceil(lo / step), math.floor(hi / step)
    return np.arange(first, last + 1) * step


def _shear_kinks(dist, transverse: np.ndarray, size: int, half_pitch: float) -> np.ndarray | None:
    if isinstance(dist, Dirac):
        return None
    points = [np.array([0.0])]
    for t in transverse:
        if abs(t) >= half_pitch:
            found = _multiples(dist, 1.0 / (size * abs(t)))
            if found is not None:
                points.append(found)
    return np.unique(np.concatenate(points))


def kink_breakpoints(kind: TransformKind | str, grid: Grid, dist: ParamDistribution):
    """Breakpoints for `quadrature`, or None when the family has no axis-aligned kinks (rotation, zoom)."""
    kind = TransformKind(kind)
    x_centers = (np.arange(grid.width) + 0.5) / grid.width - 0.5
    y_centers = (np.arange(grid.height) + 0.5) / grid.height - 0.5
    if kind is TransformKind.TRANSLATION and isinstance(dist, Product):
        return _multiples(dist.first, 1.0 / grid.width), _multiples(dist.second, 1.0 / grid.height)
    if kind is TransformKind.SHEAR and isinstance(dist, Product):
        return (
            _shear_kinks(dist.first, y_centers, grid.width, 0.5 / grid.height),
            _shear_kinks(dist.second, x_centers, grid.height, 0.5 / grid.width),
        )
    if kind is TransformKind.SHEAR_HORIZONTAL and not isinstance(dist, Product):
        return _shear_kinks(dist, y_centers, grid.width, 0.5 / grid.height)
    if kind is TransformKind.SHEAR_VERTICAL and not isinstance(dist, Product):
        return _shear_kinks(dist, x_centers, grid.height, 0.5 / grid.width)
    return None


def aligned_quadrature(
    kind: TransformKind | str,
    dist: ParamDistribution,
    grid: Grid,
    n_nodes: int = DEFAULT_NODES,
    panel_nodes: int | None = None,
) -> QuadratureRule:
    """Rule with panels split at the kinks of `kind` when `panel_nodes` is given and kinks exist.

    Without kinks (rotation, zoom, point masses) a plain `n_nodes` rule is returned.
    """
    if panel_nodes is not None:
        breaks = kink_breakpoints(kind, grid, dist)
        if breaks is not None:
            return quadrature(dist, panel_nodes, breakpoints=breaks)
    return quadrature(dist, n_nodes)
