"""Affine rescaling of distributions (unit conversion, per-row shear displacement)."""

# local
from augmoments.models.distribution import Dirac, Gaussian, ParamDistribution, Product, Uniform


def scale_distribution(dist: ParamDistribution, factor: float) -> ParamDistribution:
    """Distribution of factor * theta; factor 0 collapses to a Dirac at 0."""
    if isinstance(dist, Product):
        return Product(first=scale_distribution(dist.first, factor), second=scale_distribution(dist.second, factor))
    if factor == 0 or isinstance(dist, Dirac):
        return Dirac(at=0.0 if factor == 0 else dist.at * factor)  # type: ignore[union-attr]
    if isinstance(dist, Gaussian):
        return Gaussian(mean=dist.mean * factor, std=dist.std * abs(factor))
    lo, hi = sorted((dist.lo * factor, dist.hi * factor))
    return Uniform(lo=lo, hi=hi)
