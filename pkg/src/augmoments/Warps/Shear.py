"""Shears anchored on the image center lines."""

# third party
import numpy as np

# local
from augmoments.models.transform import TransformKind

from .Warp import Warp


class ShearHorizontalWarp(Warp):
    """Target (u, v) reads source (u - theta * v, v); each row slides by theta * v."""

    kind = TransformKind.SHEAR_HORIZONTAL

    def source(self, theta: np.ndarray, u: np.ndarray, v: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        return u - theta[0] * v, np.asarray(v, dtype=np.float64)


class ShearVerticalWarp(Warp):
    """Target (u, v) reads source (u, v - theta * u); each column slides by theta * u."""

    kind = TransformKind.SHEAR_VERTICAL

    def source(self, theta: np.ndarray, u: np.ndarray, v: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        return np.asarray(u, dtype=np.float64), v - theta[0] * u


class ShearWarp(Warp):
    """Paired shear: target (u, v) reads source (u - theta_1 * v, v - theta_2 * u)."""

    kind = TransformKind.SHEAR

    def source(self, theta: np.ndarray, u: np.ndarray, v: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        return u - theta[0] * v, v - theta[1] * u
