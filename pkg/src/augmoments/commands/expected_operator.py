# stdlib
from pathlib import Path
from typing import TYPE_CHECKING

# local
from augmoments.commands._inputs import build_rule, kind_of, load_distribution, require
from augmoments.dataio import write_tensor
from augmoments.errors import ArgumentError
from augmoments.models.grid import Grid
from augmoments.moments import expected_operator
from augmoments.moments._checks import check_dense

if TYPE_CHECKING:
    from augmoments.Experiment import Experiment


def expected_operator_command(experiment: "Experiment") -> None:
    """Write E[M(theta)] on --grid as a dense D x D AMTF tensor."""
    config = experiment.config
    out = experiment.output(Path(require(config, "output")))
    if out.suffix != ".amtf":
        raise ArgumentError(f"expected-operator writes AMTF tensors, got {out}")
    grid = Grid.parse(config.grid)
    check_dense(grid)
    kind = kind_of(config)
    dist = load_distribution(config)
    op = expected_operator(kind, dist, grid, build_rule(config, dist, grid), threads=config.threads)
    experiment.logger.info(f"expected-operator: {op.matrix.nnz} nonzeros on {grid}")
    write_tensor(out, (grid.size, grid.size), op.to_dense())
