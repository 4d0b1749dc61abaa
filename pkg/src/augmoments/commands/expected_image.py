# stdlib
from pathlib import Path
from typing import TYPE_CHECKING

# local
from augmoments.commands._inputs import build_rule, kind_of, load_distribution, load_image, require, write_image
from augmoments.errors import UnsupportedOperationError
from augmoments.models.transform import TransformKind
from augmoments.moments import (
    expected_image,
    expected_operator,
    shear_expected_analytic,
    translation_expected_analytic,
)

if TYPE_CHECKING:
    from augmoments.Experiment import Experiment


def expected_image_command(experiment: "Experiment") -> None:
    """Write E[T(x)] by quadrature, or by the closed form with --analytic."""
    config = experiment.config
    kind = kind_of(config)
    dist = load_distribution(config)
    img = load_image(config)
    out = experiment.output(Path(require(config, "output")))

    if config.analytic:
        if kind is TransformKind.TRANSLATION:
            result = translation_expected_analytic(img, dist, axis=config.axis)
        elif kind in (TransformKind.SHEAR_HORIZONTAL, TransformKind.SHEAR_VERTICAL):
            axis = "horizontal" if kind is TransformKind.SHEAR_HORIZONTAL else "vertical"
            result = shear_expected_analytic(img, dist, axis=axis)
        else:
            raise UnsupportedOperationError(f"no closed form for {kind}; drop --analytic to use quadrature")
    else:
        quad = build_rule(config, dist, img.grid)
        experiment.logger.info(f"expected-image: {kind} {config.dist} on {img.grid} with {len(quad)} nodes")
        result = expected_image(expected_operator(kind, dist, img.grid, quad, threads=config.threads), img)
    write_image(out, result)
