"""Records for the spectral analysis of the augmentation variance."""

# third party
import numpy as np
from pydantic import BaseModel, ConfigDict, Field


class SpectralFactor(BaseModel):
    """Eigenpairs of V[T(x)] with numerical rank and the tangent factor Q Lambda^{1/2}."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    eigenvalues: np.ndarray = Field(..., description="Eigenvalues sorted descending, negatives clamped to 0.")
    eigenvectors: np.ndarray = Field(..., description="Orthonormal eigenvectors as columns (Q).")
    rank: int = Field(..., ge=0, description="Count of eigenvalues above tolerance * lambda_max.")
    tangent: np.ndarray = Field(..., description="D x rank matrix Q[:, :r] diag(sqrt(lambda[:r])).")
    tolerance: float = Field(default=1e-10, description="Relative rank tolerance.")

    @property
    def lambda_max(self) -> float:
        return float(self.eigenvalues[0]) if self.eigenvalues.size else 0.0

    @property
    def trace(self) -> float:
        return float(self.eigenvalues.sum())


class RankRecord(BaseModel):
    """One row of a rank-versus-amplitude sweep."""

    amplitude: float = Field(..., ge=0, description="Transform amplitude (CLI units).")
    rank: int = Field(..., ge=0, description="Numerical rank of the variance.")
    lambda_max: float = Field(..., description="Largest eigenvalue.")
    trace: float = Field(..., description="Trace of the variance.")
