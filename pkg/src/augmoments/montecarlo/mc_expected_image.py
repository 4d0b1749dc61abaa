"""Monte-Carlo estimate of the expected augmented image."""

# third party
import numpy as np

# local
from augmoments.distribution.sample import make_rng, sample_many
from augmoments.errors import ArgumentError
from augmoments.models.distribution import ParamDistribution
from augmoments.models.grid import Image
from augmoments.models.transform import TransformKind
from augmoments.transform.reference_transform import transform_stack

DRAWS_PER_CHUNK = 1024


def running_image_means(
    kind: TransformKind | str, img: Image, thetas: np.ndarray, checkpoints: list[int]
) -> list[np.ndarray]:
    """Mean of the first n transformed images for each n in `checkpoints` (ascending)."""
    total = np.zeros(img.grid.size)
    means = []
    done = 0
    for n in checkpoints:
        while done < n:
            stop = min(done + DRAWS_PER_CHUNK, n)
            total += transform_stack(kind, thetas[done:stop], img).sum(axis=0)
            done = stop
        means.append(total / n)
    return means


def mc_expected_image(
    kind: TransformKind | str, dist: ParamDistribution, img: Image, n: int, seed: int, stream: int = 0
) -> Image:
    """Average of reference_transform over n draws from generator (seed, stream)."""
    if n < 1:
        raise ArgumentError(f"sample count must be >= 1, got {n}")
    thetas = sample_many(dist, make_rng(seed, stream), n)
    return Image(grid=img.grid, data=running_image_means(kind, img, thetas, [n])[0])
