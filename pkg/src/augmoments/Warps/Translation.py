"""Translation: content moves by +theta."""

# third party
import numpy as np

# local
from augmoments.models.transform import TransformKind

from .Warp import Warp


class TranslationWarp(Warp):
    """Target (u, v) reads source (u - theta_1, v - theta_2)."""

    kind = TransformKind.TRANSLATION

    def source(self, theta: np.ndarray, u: np.ndarray, v: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        return u - theta[0], v - theta[1]
