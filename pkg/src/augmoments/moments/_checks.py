"""Argument checks shared by the moment routines."""

# third party
import numpy as np

# local
from augmoments.errors import ArgumentError
from augmoments.models.distribution import ParamDistribution, QuadratureRule
from augmoments.models.grid import Grid
from augmoments.models.transform import TransformKind

# Largest grid for which a dense D x D second moment is materialized (96 x 96).
DENSE_LIMIT = 96 * 96


def check_arity(kind: TransformKind, dist: ParamDistribution, quad: QuadratureRule | None = None) -> None:
    if dist.arity != kind.arity:
        raise ArgumentError(f"{kind} takes {kind.arity} parameter(s) but {dist} has arity {dist.arity}")
    if quad is not None and quad.arity != kind.arity:
        raise ArgumentError(f"{kind} takes {kind.arity} parameter(s) but the quadrature rule has arity {quad.arity}")


def check_dense(grid: Grid) -> None:
    if grid.size > DENSE_LIMIT:
        raise ArgumentError(
            f"grid {grid} has D={grid.size} > {DENSE_LIMIT}; use streaming_moments for grids above 96x96"
        )


def node_chunks(count: int, chunk: int) -> list[range]:
    """Consecutive node ranges in ascending order."""
    return [range(start, min(start + chunk, count)) for start in range(0, count, chunk)]


def weighted_chunks(quad, chunk: int) -> list[tuple[np.ndarray, np.ndarray]]:
    """(thetas, weights) slices of a rule, in ascending node order."""
    return [
        (quad.thetas[nodes.start : nodes.stop], quad.weights[nodes.start : nodes.stop])
        for nodes in node_chunks(len(quad), chunk)
    ]
