# stdlib
from pathlib import Path
from typing import TYPE_CHECKING

# third party
import numpy as np

# local
from augmoments.commands._inputs import build_rule, kind_of, load_distribution, load_mnist, random_model, require
from augmoments.dataio import synth_image, write_tensor
from augmoments.errors import ArgumentError
from augmoments.formatters import ConsoleFormatter
from augmoments.losses import expected_mse, optimal_linear
from augmoments.models.grid import Grid
from augmoments.models.losses import AugmentedDataset
from augmoments.moments import pooled_moments

if TYPE_CHECKING:
    from augmoments.Experiment import Experiment


def _training_set(experiment: "Experiment") -> tuple[Grid, np.ndarray, np.ndarray]:
    """MNIST one-hot training subset when available, else seeded noise images with random targets."""
    config = experiment.config
    if config.mnist_dir is not None:
        train, _ = load_mnist(config)
        return train.grid, train.pixels, train.one_hot
    grid = Grid.parse(config.grid)
    experiment.logger.info(f"optimal-w: no MNIST directory, using {config.train_size} synthetic images on {grid}")
    pixels = np.stack([synth_image(grid, config.seed + n, config.cutoff).data for n in range(config.train_size)])
    model, _ = random_model(config, grid.size)
    return grid, pixels, model.predict(pixels)


def optimal_w_command(experiment: "Experiment") -> None:
    """Write the minimizer W* of the expected loss (and its bias next to it) as AMTF tensors."""
    config = experiment.config
    out = Path(require(config, "output"))
    if out.suffix != ".amtf":
        raise ArgumentError(f"optimal-w writes AMTF tensors, got {out}")
    kind = kind_of(config)
    dist = load_distribution(config)
    grid, pixels, targets = _training_set(experiment)

    means, variance_sum = pooled_moments(
        kind, dist, pixels, grid, build_rule(config, dist, grid), threads=config.threads
    )
    data = AugmentedDataset(means=means, targets=targets, variance_sum=variance_sum)
    model = optimal_linear(data)

    write_tensor(experiment.output(out), model.weights.shape, model.weights)
    write_tensor(experiment.output(out.with_name(f"{out.stem}.bias.amtf")), model.bias.shape, model.bias)
    diagnostics = model.diagnostics
    ConsoleFormatter(experiment.logger).display_table(
        "optimal linear model",
        ["samples", "expected_mse", "condition", "jitter", "mode"],
        [[data.size, expected_mse(model, data), diagnostics.condition_number, diagnostics.jitter, diagnostics.mode]],
    )
