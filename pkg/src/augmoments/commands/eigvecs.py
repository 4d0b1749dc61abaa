# stdlib
from pathlib import Path
from typing import TYPE_CHECKING

# local
from augmoments.commands._inputs import build_rule, kind_of, load_distribution, load_image, require, write_image
from augmoments.dataio import write_rows
from augmoments.errors import RangeError
from augmoments.models.grid import Image
from augmoments.moments import moment_set, streaming_moments
from augmoments.moments._checks import DENSE_LIMIT
from augmoments.spectral import eig_sym, top_eigvec_images

if TYPE_CHECKING:
    from augmoments.Experiment import Experiment


def eigvecs_command(experiment: "Experiment") -> None:
    """Write the k leading eigenvectors of V[T(x)] as <stem>_NN images and their eigenvalues as CSV."""
    config = experiment.config
    kind = kind_of(config)
    dist = load_distribution(config)
    img = load_image(config)
    out = Path(require(config, "output"))
    quad = build_rule(config, dist, img.grid)

    if img.grid.size > DENSE_LIMIT:
        experiment.logger.warning(f"eigvecs: {img.grid} is above 96x96, using the streaming path")
        if config.k > config.rank:
            raise RangeError(f"requested {config.k} eigenvectors but the streaming path keeps {config.rank}")
        moments = streaming_moments(
            kind, dist, img, quad, rank=config.rank, iterations=config.iterations, seed=config.seed
        )
        eigenvalues = moments.eigenvalues
        images = [Image(grid=img.grid, data=moments.eigenvectors[:, i]) for i in range(config.k)]
    else:
        factor = eig_sym(moment_set(kind, dist, img, quad, threads=config.threads).variance)
        experiment.logger.info(f"eigvecs: numerical rank {factor.rank} of {img.grid.size}")
        eigenvalues = factor.eigenvalues
        images = top_eigvec_images(factor, img.grid, config.k)

    for index, image in enumerate(images):
        write_image(experiment.output(out.with_name(f"{out.stem}_{index:02d}{out.suffix}")), image, scale=True)
    write_rows(
        experiment.output(out.with_name(f"{out.stem}.eigenvalues.csv")),
        ("index", "eigenvalue"),
        ((i, float(value)) for i, value in enumerate(eigenvalues[: max(config.k, 1)])),
    )
