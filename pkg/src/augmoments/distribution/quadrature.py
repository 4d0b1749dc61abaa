"""Deterministic Gauss-Legendre rules for E_theta[g(theta)].

Gaussian supports are truncated to mean +/- 6 std and the weights renormalized;
the discarded tail mass is below 2e-9.
"""

# stdlib
from collections.abc import Sequence

# third party
import numpy as np
from scipy.special import roots_legendre

# local
from augmoments.distribution.density import density
from augmoments.errors import ArgumentError
from augmoments.models.distribution import Dirac, Gaussian, ParamDistribution, Product, QuadratureRule, Uniform

GAUSSIAN_TRUNCATION = 6.0
DEFAULT_NODES = 129


def support(dist: Gaussian | Uniform) -> tuple[float, float]:
    """Integration interval of a scalar continuous distribution."""
    if isinstance(dist, Gaussian):
        half_width = GAUSSIAN_TRUNCATION * dist.std
        return dist.mean - half_width, dist.mean + half_width
    return dist.lo, dist.hi


def _scalar_rule(
    dist: Gaussian | Uniform | Dirac, n_nodes: int, breakpoints: Sequence[float] | None
) -> QuadratureRule:
    if isinstance(dist, Dirac):
        return QuadratureRule(thetas=np.array([[dist.at]]), weights=np.array([1.0]))

    lo, hi = support(dist)
    edges = [lo]
    if breakpoints is not None:
        edges.extend(sorted(float(b) for b in set(breakpoints) if lo < b < hi))
    edges.append(hi)

    unit_nodes, unit_weights = roots_legendre(n_nodes)
    nodes, weights = [], []
    for left, right in zip(edges[:-1], edges[1:], strict=True):
        half = 0.5 * (right - left)
        panel_nodes = left + half * (unit_nodes + 1.0)
        nodes.append(panel_nodes)
        weights.append(half * unit_weights * density(dist, panel_nodes))
    thetas = np.concatenate(nodes)
    raw = np.concatenate(weights)
    return QuadratureRule(thetas=thetas[:, None], weights=raw / raw.sum())


def _tensor(first: QuadratureRule, second: QuadratureRule) -> QuadratureRule:
    # first component varies slowest, so node k = a * len(second) + b
    t1 = np.repeat(first.thetas[:, 0], len(second))
    t2 = np.tile(second.thetas[:, 0], len(first))
    weights = np.outer(first.weights, second.weights).reshape(-1)
    return QuadratureRule(
        thetas=np.column_stack([t1, t2]), weights=weights / weights.sum(), factors=(first, second)
    )


def quadrature(
    dist: ParamDistribution,
    n_nodes: int = DEFAULT_NODES,
    breakpoints: Sequence[float] | tuple[Sequence[float] | None, Sequence[float] | None] | None = None,
) -> QuadratureRule:
    """Build a rule whose weights absorb p(theta) d theta and sum to 1.

    Args:
        dist: Distribution to integrate against.
        n_nodes: Gauss-Legendre nodes per panel (per axis for products).
        breakpoints: Interior points where the integrand has kinks; the support is
            split there into panels. For products, a pair of per-axis sequences.

    Returns:
        The quadrature rule; products carry their per-axis factors.
    """
    if n_nodes < 1:
        raise ArgumentError(f"n_nodes must be >= 1, got {n_nodes}")
    if isinstance(dist, Product):
        first_breaks, second_breaks = breakpoints if breakpoints is not None else (None, None)
        return _tensor(
            _scalar_rule(dist.first, n_nodes, first_breaks), _scalar_rule(dist.second, n_nodes, second_breaks)
        )
    return _scalar_rule(dist, n_nodes, breakpoints)  # type: ignore[arg-type]
