"""Expected data-space operator E_theta[M(theta)]."""

# third party
import numpy as np
import scipy.sparse as sparse
from joblib import Parallel, delayed

# local
from augmoments.models.distribution import ParamDistribution, QuadratureRule
from augmoments.models.grid import Grid
from augmoments.models.moments import ExpectedOperator
from augmoments.models.transform import TransformKind
from augmoments.moments._checks import check_arity, node_chunks
from augmoments.transform.bilinear import axis_stencil, bilinear_stencil, target_coords
from augmoments.utils import get_default_logger, resolve_threads
from augmoments.Warps import get_warp

NODES_PER_CHUNK = 64


def _axis_expectation(size: int, rule: QuadratureRule) -> np.ndarray:
    accumulated = np.zeros((size, size))
    for theta, weight in rule.nodes:
        rows, cols, weights = axis_stencil(size, float(theta[0]))
        accumulated[rows, cols] += weight * weights
    return accumulated


def _chunk_sum(kind: TransformKind, grid: Grid, quad: QuadratureRule, nodes: range) -> sparse.csr_matrix:
    warp = get_warp(kind)
    u, v = target_coords(grid)
    all_rows, all_cols, all_data = [], [], []
    for k in nodes:
        src_x, src_y = warp.source(warp.as_theta(quad.thetas[k]), u, v)
        rows, cols, weights = bilinear_stencil(grid, src_x, src_y)
        all_rows.append(rows)
        all_cols.append(cols)
        all_data.append(quad.weights[k] * weights)
    coo = sparse.coo_matrix(
        (np.concatenate(all_data), (np.concatenate(all_rows), np.concatenate(all_cols))), shape=(grid.size, grid.size)
    )
    return coo.tocsr()


def expected_operator(
    kind: TransformKind | str,
    dist: ParamDistribution,
    grid: Grid,
    quad: QuadratureRule,
    threads: int | None = None,
) -> ExpectedOperator:
    """Sum_k weight_k M(theta_k), reduced in ascending node order.

    Translations under a tensor-product rule are separable: the result is the
    Kronecker product of the two per-axis expected shift operators.
    """
    kind = TransformKind(kind)
    check_arity(kind, dist, quad)
    logger = get_default_logger()

    if kind is TransformKind.TRANSLATION and quad.factors is not None:
        first, second = quad.factors
        logger.debug(f"expected_operator: separable translation with {len(first)} x {len(second)} nodes")
        along_x = sparse.csr_matrix(_axis_expectation(grid.width, first))
        along_y = sparse.csr_matrix(_axis_expectation(grid.height, second))
        matrix = sparse.kron(along_y, along_x, format="csr")
    else:
        chunks = node_chunks(len(quad), NODES_PER_CHUNK)
        logger.debug(f"expected_operator: {kind} with {len(quad)} nodes in {len(chunks)} chunks")
        partials = Parallel(n_jobs=resolve_threads(threads), prefer="threads")(
            delayed(_chunk_sum)(kind, grid, quad, nodes) for nodes in chunks
        )
        matrix = sparse.csr_matrix((grid.size, grid.size))
        for partial in partials:
            matrix = matrix + partial
    matrix.eliminate_zeros()
    return ExpectedOperator(grid=grid, matrix=matrix.tocsr())
