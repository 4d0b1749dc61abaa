# stdlib
import math
from pathlib import Path
from typing import TYPE_CHECKING

# local
from augmoments.commands._inputs import kind_of, load_image, require
from augmoments.dataio import write_rank_csv
from augmoments.formatters import ConsoleFormatter
from augmoments.models.transform import TransformKind
from augmoments.spectral import rank_linearity, rank_sweep, symmetric_uniform

if TYPE_CHECKING:
    from augmoments.Experiment import Experiment


def rank_sweep_command(experiment: "Experiment") -> None:
    """Numerical rank of V[T(x)] under unif(-a, a) for every amplitude a (degrees for rotation)."""
    config = experiment.config
    kind = kind_of(config)
    img = load_image(config)
    out = experiment.output(Path(require(config, "output")))
    build = symmetric_uniform(kind)
    scale = math.pi / 180.0 if kind is TransformKind.ROTATION else 1.0

    records = rank_sweep(
        kind,
        config.amplitudes,
        img,
        lambda amplitude: build(amplitude * scale),
        n_nodes=config.nodes,
        panel_nodes=config.panel_nodes if config.aligned else None,
        threads=config.threads,
    )
    write_rank_csv(out, records)

    rows = [[r.amplitude, r.rank, r.lambda_max, r.trace] for r in records]
    ConsoleFormatter(experiment.logger).display_table("rank sweep", ["amplitude", "rank", "lambda_max", "trace"], rows)
    if len({r.amplitude for r in records}) > 1:
        slope, intercept, r_squared = rank_linearity(records)
        experiment.logger.info(f"rank ~ {slope:.4g} * amplitude + {intercept:.4g} (R^2 = {r_squared:.4f})")
