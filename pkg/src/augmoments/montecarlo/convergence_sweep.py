"""Error of Monte-Carlo estimates against the exact moments, over sample counts and runs.

Run r draws max(n_grid) parameters from stream seed + r; its estimate at n uses
the first n draws, so one run traces a whole convergence curve.
"""

# stdlib
from collections.abc import Sequence

# third party
import numpy as np
from joblib import Parallel, delayed

# local
from augmoments.distribution.sample import sample_many
from augmoments.errors import ArgumentError
from augmoments.losses.expected_mse import expected_mse
from augmoments.losses.expected_mse_by_quadrature import expected_mse_by_quadrature
from augmoments.models.distribution import ParamDistribution, Product, QuadratureRule
from augmoments.models.grid import Image
from augmoments.models.losses import AugmentedDataset, LinearModel
from augmoments.models.records import ConvergenceRecord
from augmoments.models.transform import TransformKind
from augmoments.moments.breakpoints import aligned_quadrature
from augmoments.moments.expected_image import expected_image
from augmoments.moments.expected_operator import expected_operator
from augmoments.moments.moment_set import moment_set
from augmoments.moments.translation_expected_analytic import translation_expected_analytic
from augmoments.montecarlo.mc_expected_image import running_image_means
from augmoments.montecarlo.mc_expected_mse import per_draw_losses
from augmoments.montecarlo.streams import run_rng, run_seed
from augmoments.utils import get_default_logger, resolve_threads

# Exact loss references go through the dense moment set up to this many pixels.
DENSE_LOSS_LIMIT = 32 * 32
PANEL_NODES = 8


def reference_image(
    kind: TransformKind, dist: ParamDistribution, img: Image, quad: QuadratureRule, threads: int | None = None
) -> Image:
    """Exact expected image: closed-form for translation, quadrature otherwise."""
    if kind is TransformKind.TRANSLATION and isinstance(dist, Product):
        return translation_expected_analytic(img, dist)
    return expected_image(expected_operator(kind, dist, img.grid, quad, threads=threads), img)


def reference_loss(
    model: LinearModel,
    target: np.ndarray,
    kind: TransformKind,
    dist: ParamDistribution,
    img: Image,
    quad: QuadratureRule,
    threads: int | None = None,
) -> float:
    """Exact expected loss of `model` on (img, target)."""
    if img.grid.size <= DENSE_LOSS_LIMIT:
        moments = moment_set(kind, dist, img, quad, threads=threads)
        return expected_mse(model, AugmentedDataset.from_moment_sets([moments], [target]))
    return expected_mse_by_quadrature(model, kind, [img], np.atleast_2d(target), quad)


def _run(
    kind: TransformKind,
    dist: ParamDistribution,
    img: Image,
    n_grid: list[int],
    seed: int,
    run_index: int,
    ref_image: np.ndarray,
    model: LinearModel | None,
    target: np.ndarray | None,
    ref_loss: float | None,
) -> list[ConvergenceRecord]:
    thetas = sample_many(dist, run_rng(seed, run_index), n_grid[-1])
    means = running_image_means(kind, img, thetas, n_grid)
    losses = np.cumsum(per_draw_losses(model, img, target, kind, thetas)) if model is not None else None
    records = []
    for n, mean in zip(n_grid, means, strict=True):
        records.append(
            ConvergenceRecord(
                n_samples=n,
                run_index=run_index,
                image_l2_error=float(np.linalg.norm(mean - ref_image)),
                loss_abs_error=None if losses is None else abs(float(losses[n - 1]) / n - ref_loss),
                seed=run_seed(seed, run_index),
            )
        )
    return records


def convergence_sweep(
    kind: TransformKind | str,
    dist: ParamDistribution,
    img: Image,
    n_grid: Sequence[int],
    runs: int,
    seed: int,
    model: LinearModel | None = None,
    target: np.ndarray | None = None,
    quad: QuadratureRule | None = None,
    threads: int | None = None,
) -> list[ConvergenceRecord]:
    """ConvergenceRecords ordered by (n, run).

    Args:
        kind: Transform family.
        dist: Parameter distribution.
        img: Image to augment.
        n_grid: Ascending sample counts.
        runs: Independent repetitions; run r uses stream seed + r.
        seed: Base seed.
        model: Optional linear model; with `target`, loss errors are recorded too.
        target: Regression target for the loss errors.
        quad: Rule for the exact references; kink-aligned panels by default.
        threads: Worker count for the runs (results do not depend on it).
    """
    kind = TransformKind(kind)
    n_grid = [int(n) for n in n_grid]
    if not n_grid or n_grid[0] < 1 or any(b <= a for a, b in zip(n_grid, n_grid[1:], strict=False)):
        raise ArgumentError(f"n_grid must be strictly ascending counts >= 1, got {n_grid}")
    if runs < 1:
        raise ArgumentError(f"runs must be >= 1, got {runs}")
    if (model is None) != (target is None):
        raise ArgumentError("model and target must be given together")
    if target is not None:
        target = np.asarray(target, dtype=np.float64)

    logger = get_default_logger()
    quad = quad or aligned_quadrature(kind, dist, img.grid, panel_nodes=PANEL_NODES)
    ref_image = reference_image(kind, dist, img, quad, threads=threads).data
    ref_loss = None if model is None else reference_loss(model, target, kind, dist, img, quad, threads=threads)
    logger.info(f"convergence_sweep: {runs} runs over n = {n_grid}")

    per_run = Parallel(n_jobs=resolve_threads(threads), prefer="threads")(
        delayed(_run)(kind, dist, img, n_grid, seed, r, ref_image, model, target, ref_loss) for r in range(runs)
    )
    return sorted((record for records in per_run for record in records), key=lambda r: (r.n_samples, r.run_index))
