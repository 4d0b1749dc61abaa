"""Zoom about the image center."""

# third party
import numpy as np

# local
from augmoments.errors import ArgumentError
from augmoments.models.transform import TransformKind

from .Warp import Warp


class ZoomWarp(Warp):
    """Target (u, v) reads source (u / theta, v / theta); theta > 1 magnifies."""

    kind = TransformKind.ZOOM

    def validate(self, theta: np.ndarray) -> None:
        if theta[0] <= 0:
            raise ArgumentError(f"zoom factor must be > 0, got {theta[0]}")

    def source(self, theta: np.ndarray, u: np.ndarray, v: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        return u / theta[0], v / theta[0]
