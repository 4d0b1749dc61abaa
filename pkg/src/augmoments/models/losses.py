"""Records for the linear model and the augmented dataset its expected loss is computed on."""

# third party
import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

# local
from augmoments.models.moments import MomentSet

# Largest |S - S^T| entry accepted for a variance sum, relative to its largest entry.
SYMMETRY_TOLERANCE = 1e-10


class SolveDiagnostics(BaseModel):
    """How an optimal linear model was obtained."""

    condition_number: float = Field(..., description="2-norm condition number of the regularized Gram matrix.")
    jitter: float = Field(default=0.0, description="Ridge jitter added after a failed solve (0 if none).")
    mode: str = Field(default="joint", description="'joint' (bias by centering) or 'fixed-bias'.")


class LinearModel(BaseModel):
    """Affine model f(x) = W x + b."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    weights: np.ndarray = Field(..., description="K x D weight matrix W.")
    bias: np.ndarray = Field(..., description="Length-K bias b.")
    diagnostics: SolveDiagnostics | None = Field(default=None, description="Set when produced by a solver.")

    @model_validator(mode="after")
    def _check(self) -> "LinearModel":
        if self.weights.ndim != 2 or self.weights.shape[0] < 1:
            raise ValueError(f"weights must be K x D with K >= 1, got shape {self.weights.shape}")
        if self.bias.shape != (self.weights.shape[0],):
            raise ValueError(f"bias has shape {self.bias.shape}, expected ({self.weights.shape[0]},)")
        if not (np.all(np.isfinite(self.weights)) and np.all(np.isfinite(self.bias))):
            raise ValueError("model parameters must be finite")
        return self

    @classmethod
    def zeros(cls, outputs: int, inputs: int) -> "LinearModel":
        return cls(weights=np.zeros((outputs, inputs)), bias=np.zeros(outputs))

    @property
    def outputs(self) -> int:
        return int(self.weights.shape[0])

    @property
    def inputs(self) -> int:
        return int(self.weights.shape[1])

    def predict(self, x: np.ndarray) -> np.ndarray:
        """Apply the model to one vector (D,) or a batch (N, D)."""
        return x @ self.weights.T + self.bias


class AugmentedDataset(BaseModel):
    """Per-sample augmentation moments with regression targets.

    Per-sample variances are optional: the expected loss and its minimizer only
    need their sum, so whole datasets can be carried in pooled form.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    means: np.ndarray = Field(..., description="N x D matrix of E[T(x_n)].")
    targets: np.ndarray = Field(..., description="N x K matrix of targets y_n.")
    variance_sum: np.ndarray = Field(..., description="D x D sum over n of V[T(x_n)].")
    variances: list[np.ndarray] | None = Field(default=None, description="Per-sample V[T(x_n)] when kept.")
    tangents: list[np.ndarray] | None = Field(default=None, description="Per-sample D x r tangent factors.")

    @model_validator(mode="after")
    def _check(self) -> "AugmentedDataset":
        n, d = self.means.shape
        if self.targets.ndim != 2 or self.targets.shape[0] != n:
            raise ValueError(f"targets must be {n} x K, got shape {self.targets.shape}")
        if self.variance_sum.shape != (d, d):
            raise ValueError(f"variance_sum has shape {self.variance_sum.shape}, expected ({d}, {d})")
        scale = float(np.max(np.abs(self.variance_sum), initial=0.0))
        if not np.allclose(self.variance_sum, self.variance_sum.T, rtol=0.0, atol=SYMMETRY_TOLERANCE * scale):
            raise ValueError("variance_sum must be symmetric")
        if self.variances is not None and (
            len(self.variances) != n or any(v.shape != (d, d) for v in self.variances)
        ):
            raise ValueError(f"variances must be {n} matrices of shape ({d}, {d})")
        if self.tangents is not None and (len(self.tangents) != n or any(t.shape[0] != d for t in self.tangents)):
            raise ValueError(f"tangents must be {n} matrices with {d} rows")
        return self

    @classmethod
    def from_samples(
        cls,
        means: list[np.ndarray] | np.ndarray,
        variances: list[np.ndarray],
        targets: list[np.ndarray] | np.ndarray,
        tangents: list[np.ndarray] | None = None,
    ) -> "AugmentedDataset":
        means_arr = np.atleast_2d(np.asarray(means, dtype=np.float64))
        targets_arr = np.asarray(targets, dtype=np.float64).reshape(means_arr.shape[0], -1)
        variances = [np.asarray(v, dtype=np.float64) for v in variances]
        return cls(
            means=means_arr,
            targets=targets_arr,
            variance_sum=np.sum(variances, axis=0),
            variances=variances,
            tangents=tangents,
        )

    @classmethod
    def from_moment_sets(cls, moments: list[MomentSet], targets: list[np.ndarray] | np.ndarray) -> "AugmentedDataset":
        return cls.from_samples([m.mean for m in moments], [m.variance for m in moments], targets)

    @property
    def size(self) -> int:
        return int(self.means.shape[0])

    @property
    def dim(self) -> int:
        return int(self.means.shape[1])

    @property
    def outputs(self) -> int:
        return int(self.targets.shape[1])
