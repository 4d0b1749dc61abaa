"""Rotation about the image center (theta in radians)."""

# third party
import numpy as np

# local
from augmoments.models.transform import TransformKind

from .Warp import Warp


class RotationWarp(Warp):
    """Target (u, v) reads source R(-theta) (u, v)."""

    kind = TransformKind.ROTATION

    def source(self, theta: np.ndarray, u: np.ndarray, v: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        cos, sin = np.cos(theta[0]), np.sin(theta[0])
        return cos * u + sin * v, cos * v - sin * u
