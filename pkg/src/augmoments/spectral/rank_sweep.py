"""Numerical rank of the augmentation variance as a function of amplitude."""

# stdlib
from collections.abc import Callable, Sequence

# third party
import numpy as np
from scipy.stats import linregress

# local
from augmoments.distribution.quadrature import DEFAULT_NODES
from augmoments.errors import ArgumentError
from augmoments.models.distribution import Dirac, ParamDistribution, Product, Uniform
from augmoments.models.grid import Image
from augmoments.models.spectral import RankRecord
from augmoments.models.transform import TransformKind
from augmoments.moments.breakpoints import aligned_quadrature
from augmoments.moments.moment_set import moment_set
from augmoments.spectral.eig_sym import RANK_TOLERANCE, eig_sym
from augmoments.utils import get_default_logger


def symmetric_uniform(kind: TransformKind | str) -> Callable[[float], ParamDistribution]:
    """Builder a -> unif(-a, a) (a point mass at 0 for a = 0), paired for two-parameter kinds."""
    kind = TransformKind(kind)
    identity = 1.0 if kind is TransformKind.ZOOM else 0.0

    def build(amplitude: float) -> ParamDistribution:
        scalar: Dirac | Uniform = (
            Dirac(at=identity)
            if amplitude == 0
            else Uniform(lo=identity - amplitude, hi=identity + amplitude)
        )
        return Product(first=scalar, second=scalar) if kind.arity == 2 else scalar

    return build


def rank_sweep(
    kind: TransformKind | str,
    amplitudes: Sequence[float],
    img: Image,
    dist_builder: Callable[[float], ParamDistribution],
    n_nodes: int = DEFAULT_NODES,
    panel_nodes: int | None = None,
    tolerance: float = RANK_TOLERANCE,
    threads: int | None = None,
) -> list[RankRecord]:
    """One RankRecord per amplitude; `dist_builder` maps an amplitude to its distribution."""
    amplitudes = [float(a) for a in amplitudes]
    if any(a < 0 for a in amplitudes):
        raise ArgumentError(f"amplitudes must be >= 0, got {amplitudes}")
    if any(b < a for a, b in zip(amplitudes, amplitudes[1:], strict=False)):
        raise ArgumentError(f"amplitudes must be sorted ascending, got {amplitudes}")

    logger = get_default_logger()
    records = []
    for amplitude in amplitudes:
        dist = dist_builder(amplitude)
        quad = aligned_quadrature(kind, dist, img.grid, n_nodes, panel_nodes)
        factor = eig_sym(moment_set(kind, dist, img, quad, threads=threads).variance, tolerance)
        logger.info(f"rank_sweep: amplitude {amplitude:g} -> rank {factor.rank}")
        records.append(
            RankRecord(amplitude=amplitude, rank=factor.rank, lambda_max=factor.lambda_max, trace=factor.trace)
        )
    return records


def rank_linearity(records: Sequence[RankRecord]) -> tuple[float, float, float]:
    """Least-squares (slope, intercept, R^2) of rank against amplitude."""
    if len(records) < 2:
        raise ArgumentError(f"need at least 2 records to fit a line, got {len(records)}")
    amplitudes = np.array([r.amplitude for r in records])
    ranks = np.array([r.rank for r in records], dtype=np.float64)
    if np.ptp(amplitudes) == 0:
        raise ArgumentError("amplitudes must not all be equal")
    fit = linregress(amplitudes, ranks)
    r_squared = 1.0 if np.ptp(ranks) == 0 else float(fit.rvalue**2)
    return float(fit.slope), float(fit.intercept), r_squared
