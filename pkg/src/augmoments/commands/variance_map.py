# stdlib
from pathlib import Path
from typing import TYPE_CHECKING

# local
from augmoments.commands._inputs import build_rule, kind_of, load_distribution, load_image, require, write_image
from augmoments.models.grid import Image
from augmoments.moments import moment_set, streaming_moments
from augmoments.moments._checks import DENSE_LIMIT

if TYPE_CHECKING:
    from augmoments.Experiment import Experiment


def variance_map_command(experiment: "Experiment") -> None:
    """Write the pixel variance diag V[T(x)] (scaled to [0, 1] for PGM)."""
    config = experiment.config
    kind = kind_of(config)
    dist = load_distribution(config)
    img = load_image(config)
    out = experiment.output(Path(require(config, "output")))
    quad = build_rule(config, dist, img.grid)

    if img.grid.size > DENSE_LIMIT:
        experiment.logger.warning(f"variance-map: {img.grid} is above 96x96, using the streaming path")
        moments = streaming_moments(
            kind, dist, img, quad, rank=config.rank, iterations=config.iterations, seed=config.seed
        )
        variance = Image(grid=img.grid, data=moments.variance_diagonal)
    else:
        variance = moment_set(kind, dist, img, quad, threads=config.threads).pixel_variance
    write_image(out, variance, scale=True)
