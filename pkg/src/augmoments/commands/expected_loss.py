# stdlib
from pathlib import Path
from typing import TYPE_CHECKING

# third party
import numpy as np

# local
from augmoments.commands._inputs import build_rule, kind_of, load_distribution, load_image, random_model, require
from augmoments.dataio import write_rows
from augmoments.losses import (
    delta_variance,
    expected_mse,
    expected_mse_by_quadrature,
    mse_grad_at_mean,
    mse_output_grad,
    tangentprop_bound,
    taylor_expected_loss,
    variance_bound,
)
from augmoments.models.losses import AugmentedDataset
from augmoments.moments import moment_set
from augmoments.spectral import eig_sym

if TYPE_CHECKING:
    from augmoments.Experiment import Experiment

HEADER = (
    "expected_mse",
    "quadrature_mse",
    "delta_variance",
    "variance_bound",
    "taylor_loss",
    "tangentprop_bound",
    "kappa",
)


def expected_loss_command(experiment: "Experiment") -> None:
    """Expected loss of a seeded random linear model on one image, with its variance estimates and bounds."""
    config = experiment.config
    kind = kind_of(config)
    dist = load_distribution(config)
    img = load_image(config)
    out = experiment.output(Path(require(config, "output")))
    quad = build_rule(config, dist, img.grid)
    model, target = random_model(config, img.grid.size)

    moments = moment_set(kind, dist, img, quad, threads=config.threads)
    factor = eig_sym(moments.variance)
    data = AugmentedDataset.from_moment_sets([moments], [target])
    residual = target - model.predict(moments.mean)
    loss_at_mean = float(residual @ residual)
    hessian_out = 2.0 * np.eye(model.outputs)

    bound, kappa = tangentprop_bound(loss_at_mean, hessian_out, model.weights, factor.tangent)
    row = (
        expected_mse(model, data),
        expected_mse_by_quadrature(model, kind, [img], target[None, :], quad),
        delta_variance(mse_grad_at_mean(model, moments.mean, target), moments.variance),
        variance_bound(mse_output_grad(model, moments.mean, target), model.weights, factor.tangent),
        taylor_expected_loss(loss_at_mean, 2.0 * model.weights.T @ model.weights, moments.variance),
        bound,
        kappa,
    )
    write_rows(out, HEADER, [row])
    experiment.logger.info(", ".join(f"{name}={value:.6g}" for name, value in zip(HEADER, row, strict=True)))
