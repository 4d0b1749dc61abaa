"""Grid geometry and the flattened grayscale image container."""

# stdlib
from typing import Any

# third party
import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


class Grid(BaseModel):
    """Uniform pixel grid; pixel (i, j) is row i, column j, flattened row-major."""

    model_config = ConfigDict(frozen=True)

    height: int = Field(..., ge=1, description="Number of pixel rows.")
    width: int = Field(..., ge=1, description="Number of pixel columns.")

    @property
    def size(self) -> int:
        """Flattened dimension D = height * width."""
        return self.height * self.width

    @property
    def shape(self) -> tuple[int, int]:
        return (self.height, self.width)

    @classmethod
    def square(cls, side: int) -> "Grid":
        return cls(height=side, width=side)

    @classmethod
    def parse(cls, text: str) -> "Grid":
        """Parse "HxW" (or a single integer for a square grid)."""
        parts = text.lower().split("x")
        if len(parts) == 1:
            return cls.square(int(parts[0]))
        if len(parts) != 2:
            raise ValueError(f"grid must look like '64x64', got {text!r}")
        return cls(height=int(parts[0]), width=int(parts[1]))

    def __str__(self) -> str:
        return f"{self.height}x{self.width}"


class Image(BaseModel):
    """Flattened grayscale raster; intensities are dimensionless and usually in [0, 1]."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    grid: Grid = Field(..., description="Geometry of the raster.")
    data: np.ndarray = Field(..., description="Row-major intensities, length grid.size.")

    @field_validator("data", mode="before")
    @classmethod
    def _as_float_vector(cls, value: Any) -> np.ndarray:
        array = np.asarray(value, dtype=np.float64).reshape(-1)
        array.setflags(write=False)
        return array

    @model_validator(mode="after")
    def _check_data(self) -> "Image":
        if self.data.shape[0] != self.grid.size:
            raise ValueError(f"image data has {self.data.shape[0]} values, grid {self.grid} needs {self.grid.size}")
        if not np.all(np.isfinite(self.data)):
            raise ValueError("image data contains non-finite values")
        return self

    @classmethod
    def from_array(cls, array: np.ndarray) -> "Image":
        """Build an image from a 2-D (height, width) array."""
        array = np.asarray(array, dtype=np.float64)
        if array.ndim != 2:
            raise ValueError(f"expected a 2-D array, got shape {array.shape}")
        return cls(grid=Grid(height=array.shape[0], width=array.shape[1]), data=array.reshape(-1))

    @classmethod
    def impulse(cls, grid: Grid, i: int, j: int) -> "Image":
        """Image with a single unit pixel at (i, j)."""
        data = np.zeros(grid.size)
        data[i * grid.width + j] = 1.0
        return cls(grid=grid, data=data)

    @classmethod
    def zeros(cls, grid: Grid) -> "Image":
        return cls(grid=grid, data=np.zeros(grid.size))

    def to_array(self) -> np.ndarray:
        """Return the raster as a (height, width) view."""
        return self.data.reshape(self.grid.shape)

    def with_data(self, data: np.ndarray) -> "Image":
        return Image(grid=self.grid, data=data)
