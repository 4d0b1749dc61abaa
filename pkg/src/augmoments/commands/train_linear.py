# stdlib
from pathlib import Path
from typing import TYPE_CHECKING

# local
from augmoments.commands._inputs import build_rule, kind_of, load_distribution, load_mnist, require
from augmoments.dataio import write_train_csv
from augmoments.formatters import ConsoleFormatter
from augmoments.montecarlo import sgd_train_linear

if TYPE_CHECKING:
    from augmoments.Experiment import Experiment


def train_linear_command(experiment: "Experiment") -> None:
    """One-hot linear regression on MNIST for each training mode in --n-aug."""
    config = experiment.config
    kind = kind_of(config)
    dist = load_distribution(config)
    out = experiment.output(Path(require(config, "output")))
    train, test = load_mnist(config)
    quad = build_rule(config, dist, train.grid)

    curves = []
    for n_aug in config.n_aug:
        experiment.logger.info(f"train-linear: n_aug={n_aug} on {len(train)} samples for {config.epochs} epochs")
        curves.extend(
            sgd_train_linear(
                train,
                test,
                kind,
                dist,
                n_aug,
                epochs=config.epochs,
                lr=config.lr,
                batch_size=config.batch_size,
                seed=config.seed,
                quad=quad,
                threads=config.threads,
            )
        )
    write_train_csv(out, curves)

    finals = {}
    for curve in curves:
        finals[str(curve.n_aug)] = curve
    ConsoleFormatter(experiment.logger).display_table(
        "final test metrics",
        ["n_aug", "epoch", "test_mse", "test_acc"],
        [[name, c.epoch, c.test_mse, c.test_accuracy] for name, c in finals.items()],
    )
