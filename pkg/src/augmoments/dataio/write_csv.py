"""CSV outputs: header row, comma separator, LF line endings, shortest round-trip floats."""

# stdlib
import csv
from collections.abc import Iterable, Sequence
from pathlib import Path

# local
from augmoments.models.records import ConvergenceRecord, TrainCurve
from augmoments.models.spectral import RankRecord

CONVERGENCE_HEADER = ("n", "run", "img_l2_err", "loss_abs_err", "seed")
RANK_HEADER = ("amplitude", "rank", "lambda_max", "trace")
TRAIN_HEADER = ("train_size", "n_aug", "epoch", "test_mse", "test_acc", "seed")


def format_value(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        # integral values print without a trailing ".0"
        if value.is_integer() and abs(value) < 1e15:
            return str(int(value))
        return repr(value)
    return str(value)


def write_rows(path: str | Path, header: Sequence[str], rows: Iterable[Sequence]) -> None:
    with open(path, "w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([format_value(v) for v in row])


def write_convergence_csv(path: str | Path, records: Iterable[ConvergenceRecord]) -> None:
    write_rows(
        path,
        CONVERGENCE_HEADER,
        ((r.n_samples, r.run_index, r.image_l2_error, r.loss_abs_error, r.seed) for r in records),
    )


def write_rank_csv(path: str | Path, records: Iterable[RankRecord]) -> None:
    write_rows(path, RANK_HEADER, ((r.amplitude, r.rank, r.lambda_max, r.trace) for r in records))


def write_train_csv(path: str | Path, curves: Iterable[TrainCurve]) -> None:
    write_rows(
        path,
        TRAIN_HEADER,
        ((c.train_size, c.n_aug, c.epoch, c.test_mse, c.test_accuracy, c.seed) for c in curves),
    )
