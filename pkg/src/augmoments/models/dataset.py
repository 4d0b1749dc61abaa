"""Labeled image dataset (MNIST-style)."""

# third party
import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

# local
from augmoments.errors import RangeError
from augmoments.models.grid import Grid, Image


class LabeledDataset(BaseModel):
    """Images sharing one grid, stored as an N x D matrix, with class labels."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    grid: Grid = Field(..., description="Common grid of all images.")
    pixels: np.ndarray = Field(..., description="N x D intensities in [0, 1].")
    labels: np.ndarray = Field(..., description="Length-N integer class indices.")
    num_classes: int = Field(default=10, ge=1, description="Number of classes K.")

    @model_validator(mode="after")
    def _check(self) -> "LabeledDataset":
        if self.pixels.ndim != 2 or self.pixels.shape[1] != self.grid.size:
            raise ValueError(f"pixels must be N x {self.grid.size}, got shape {self.pixels.shape}")
        if self.labels.shape != (self.pixels.shape[0],):
            raise ValueError(f"{self.pixels.shape[0]} images but {self.labels.shape[0]} labels")
        if self.labels.size and (self.labels.min() < 0 or self.labels.max() >= self.num_classes):
            raise ValueError(f"labels must lie in [0, {self.num_classes - 1}]")
        return self

    def __len__(self) -> int:
        return int(self.labels.shape[0])

    @property
    def images(self) -> list[Image]:
        return [Image(grid=self.grid, data=row) for row in self.pixels]

    @property
    def one_hot(self) -> np.ndarray:
        """N x K one-hot targets."""
        encoded = np.zeros((len(self), self.num_classes))
        encoded[np.arange(len(self)), self.labels] = 1.0
        return encoded

    def subset(self, count: int, offset: int = 0) -> "LabeledDataset":
        """Contiguous slice [offset, offset + count)."""
        if offset < 0 or count < 1 or offset + count > len(self):
            raise RangeError(f"subset [{offset}, {offset + count}) outside dataset of size {len(self)}")
        window = slice(offset, offset + count)
        return LabeledDataset(
            grid=self.grid, pixels=self.pixels[window], labels=self.labels[window], num_classes=self.num_classes
        )
