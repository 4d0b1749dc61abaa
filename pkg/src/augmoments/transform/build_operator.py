"""Sparse data-space operator M(theta) such that t(theta) = M(theta) x."""

# third party
import scipy.sparse as sparse

# local
from augmoments.models.grid import Grid
from augmoments.models.transform import SparseOperator, TransformKind
from augmoments.transform.bilinear import axis_stencil, bilinear_stencil, target_coords
from augmoments.Warps import get_warp


def build_operator(kind: TransformKind | str, theta, grid: Grid) -> SparseOperator:
    """Build M(theta): row r holds the bilinear weights of the source point read by target pixel r."""
    warp = get_warp(kind)
    u, v = target_coords(grid)
    src_x, src_y = warp.source(warp.as_theta(theta), u, v)
    rows, cols, weights = bilinear_stencil(grid, src_x, src_y)
    matrix = sparse.csr_matrix((weights, (rows, cols)), shape=(grid.size, grid.size))
    return SparseOperator(grid=grid, matrix=matrix)


def build_axis_operator(size: int, shift: float) -> sparse.csr_matrix:
    """1-D shift operator along one axis; translation operators are Kronecker products of two of these."""
    rows, cols, weights = axis_stencil(size, shift)
    return sparse.csr_matrix((weights, (rows, cols)), shape=(size, size))
