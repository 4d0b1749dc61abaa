# stdlib
from pathlib import Path
from typing import TYPE_CHECKING

# third party
import numpy as np

# local
from augmoments.commands._inputs import (
    build_rule,
    kind_of,
    load_distribution,
    load_image,
    random_model,
    require,
)
from augmoments.dataio import write_convergence_csv
from augmoments.formatters import ConsoleFormatter
from augmoments.montecarlo import convergence_sweep

if TYPE_CHECKING:
    from augmoments.Experiment import Experiment


def mc_converge_command(experiment: "Experiment") -> None:
    """Monte-Carlo image and loss errors against the exact moments, per sample count and run."""
    config = experiment.config
    kind = kind_of(config)
    dist = load_distribution(config)
    img = load_image(config)
    out = experiment.output(Path(require(config, "output")))
    model, target = random_model(config, img.grid.size)

    records = convergence_sweep(
        kind,
        dist,
        img,
        config.n_grid,
        config.runs,
        config.seed,
        model=model,
        target=target,
        quad=build_rule(config, dist, img.grid),
        threads=config.threads,
    )
    write_convergence_csv(out, records)

    rows = []
    for n in config.n_grid:
        errors = np.array([r.image_l2_error for r in records if r.n_samples == n])
        losses = np.array([r.loss_abs_error for r in records if r.n_samples == n])
        rows.append([n, float(errors.mean()), float(errors.std()), float(losses.mean())])
    ConsoleFormatter(experiment.logger).display_table(
        "Monte-Carlo convergence", ["n", "img_l2_err mean", "img_l2_err std", "loss_abs_err mean"], rows
    )
    if len(config.n_grid) > 1:
        slope = np.polyfit(np.log(config.n_grid), np.log([row[1] for row in rows]), 1)[0]
        experiment.logger.info(f"log-log slope of the image error: {slope:.3f}")
