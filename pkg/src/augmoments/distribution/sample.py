"""Seeded sampling of transform parameters.

Generators are numpy's Philox counter-based bit generator, so a (seed, stream)
pair gives the same sequence on every platform.
"""

# third party
import numpy as np

# local
from augmoments.models.distribution import Dirac, Gaussian, ParamDistribution, Product, Uniform


def make_rng(seed: int, stream: int = 0) -> np.random.Generator:
    """Generator for stream `stream` of run seed `seed` (seeded with seed + stream)."""
    return np.random.Generator(np.random.Philox(seed + stream))


def _scalar_draws(dist: Gaussian | Uniform | Dirac, rng: np.random.Generator, n: int) -> np.ndarray:
    if isinstance(dist, Gaussian):
        return rng.normal(dist.mean, dist.std, size=n)
    if isinstance(dist, Uniform):
        return rng.uniform(dist.lo, dist.hi, size=n)
    return np.full(n, dist.at)


def sample(dist: ParamDistribution, rng: np.random.Generator) -> float | tuple[float, float]:
    """One draw; products draw their components independently, first then second."""
    if isinstance(dist, Product):
        return float(_scalar_draws(dist.first, rng, 1)[0]), float(_scalar_draws(dist.second, rng, 1)[0])
    return float(_scalar_draws(dist, rng, 1)[0])


def sample_many(dist: ParamDistribution, rng: np.random.Generator, n: int) -> np.ndarray:
    """n draws as an (n, arity) array; for products all first components are drawn before the second."""
    if isinstance(dist, Product):
        first = _scalar_draws(dist.first, rng, n)
        second = _scalar_draws(dist.second, rng, n)
        return np.column_stack([first, second])
    return _scalar_draws(dist, rng, n)[:, None]
