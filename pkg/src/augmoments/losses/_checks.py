"""Shape checks shared by the loss routines."""

# third party
import numpy as np

# local
from augmoments.errors import ShapeError
from augmoments.models.losses import AugmentedDataset, LinearModel


def check_model_data(model: LinearModel, data: AugmentedDataset) -> None:
    if model.inputs != data.dim:
        raise ShapeError(f"model takes {model.inputs} inputs but the data has dimension {data.dim}")
    if model.outputs != data.outputs:
        raise ShapeError(f"model has {model.outputs} outputs but the targets have {data.outputs}")


def as_vector(value, length: int, name: str) -> np.ndarray:
    array = np.asarray(value, dtype=np.float64)
    if array.shape != (length,):
        raise ShapeError(f"{name} has shape {array.shape}, expected ({length},)")
    return array


def as_matrix(value, shape: tuple[int | None, int | None], name: str) -> np.ndarray:
    array = np.asarray(value, dtype=np.float64)
    if array.ndim != 2 or any(want is not None and got != want for got, want in zip(array.shape, shape, strict=True)):
        expected = tuple("*" if s is None else s for s in shape)
        raise ShapeError(f"{name} has shape {array.shape}, expected {expected}")
    return array
