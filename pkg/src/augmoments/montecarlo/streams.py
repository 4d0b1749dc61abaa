"""Per-run generator streams: run r of a sweep seeded with `seed` draws from stream seed + r."""

# third party
import numpy as np

# local
from augmoments.distribution.sample import make_rng


def run_seed(seed: int, run_index: int) -> int:
    return seed + run_index


def run_rng(seed: int, run_index: int) -> np.random.Generator:
    return make_rng(seed, run_index)
