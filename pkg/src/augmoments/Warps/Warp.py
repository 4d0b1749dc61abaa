"""Abstract base class for coordinate warps t_theta."""

# stdlib
from abc import ABC, abstractmethod

# third party
import numpy as np

# local
from augmoments.errors import ArgumentError
from augmoments.models.transform import TransformKind


class Warp(ABC):
    """Maps a target coordinate (u, v) to the source coordinate it reads from.

    Subclasses implement `source` vectorized over coordinate arrays; `theta` is
    always a 1-D array of length `arity` once it reaches them.
    """

    kind: TransformKind

    @property
    def arity(self) -> int:
        return self.kind.arity

    def as_theta(self, theta: float | tuple[float, float] | np.ndarray) -> np.ndarray:
        """Validate theta and return it as a float array of length `arity`."""
        values = np.atleast_1d(np.asarray(theta, dtype=np.float64)).reshape(-1)
        if values.shape[0] != self.arity:
            raise ArgumentError(f"{self.kind} takes {self.arity} parameter(s), got {values.shape[0]}")
        if not np.all(np.isfinite(values)):
            raise ArgumentError(f"{self.kind} parameter must be finite, got {values.tolist()}")
        self.validate(values)
        return values

    def validate(self, theta: np.ndarray) -> None:
        """Hook for family-specific parameter constraints."""
        return None

    @abstractmethod
    def source(self, theta: np.ndarray, u: np.ndarray, v: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """Return the source coordinates read by targets (u, v)."""
        pass
