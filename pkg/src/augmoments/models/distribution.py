"""Parameter distributions p(theta) and quadrature rules."""

# stdlib
from collections.abc import Iterator
from typing import Annotated, Literal

# third party
import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


class BaseDistribution(BaseModel):
    """Base class for all parameter distributions."""

    model_config = ConfigDict(frozen=True)

    @property
    def arity(self) -> int:
        return 1


class Gaussian(BaseDistribution):
    """Normal density with the given mean and standard deviation."""

    family: Literal["gauss"] = Field(default="gauss", description="Distribution family tag.")
    mean: float = Field(default=0.0, allow_inf_nan=False, description="Mean of theta.")
    std: float = Field(..., gt=0, allow_inf_nan=False, description="Standard deviation of theta.")

    def __str__(self) -> str:
        return f"gauss({self.mean!r},{self.std!r})"


class Uniform(BaseDistribution):
    """Uniform density on [lo, hi]."""

    family: Literal["unif"] = Field(default="unif", description="Distribution family tag.")
    lo: float = Field(..., allow_inf_nan=False, description="Lower end of the support.")
    hi: float = Field(..., allow_inf_nan=False, description="Upper end of the support.")

    @model_validator(mode="after")
    def _check_bounds(self) -> "Uniform":
        if not self.lo < self.hi:
            raise ValueError(f"uniform needs lo < hi, got lo={self.lo}, hi={self.hi}")
        return self

    def __str__(self) -> str:
        return f"unif({self.lo!r},{self.hi!r})"


class Dirac(BaseDistribution):
    """Point mass; theta is deterministic."""

    family: Literal["dirac"] = Field(default="dirac", description="Distribution family tag.")
    at: float = Field(..., allow_inf_nan=False, description="Location of the point mass.")

    def __str__(self) -> str:
        return f"dirac({self.at!r})"


ScalarDistribution = Annotated[Gaussian | Uniform | Dirac, Field(discriminator="family")]


class Product(BaseDistribution):
    """Independent pair of scalar distributions for two-parameter transforms."""

    family: Literal["prod"] = Field(default="prod", description="Distribution family tag.")
    first: ScalarDistribution = Field(..., description="Distribution of theta_1.")
    second: ScalarDistribution = Field(..., description="Distribution of theta_2.")

    @property
    def arity(self) -> int:
        return 2

    def __str__(self) -> str:
        return f"prod({self.first},{self.second})"


ParamDistribution = Gaussian | Uniform | Dirac | Product
TaggedDistribution = Annotated[ParamDistribution, Field(discriminator="family")]


class QuadratureRule(BaseModel):
    """Nodes and weights approximating E[g(theta)]; weights already include p(theta) d theta."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    thetas: np.ndarray = Field(..., description="(n, arity) array of parameter nodes.")
    weights: np.ndarray = Field(..., description="(n,) nonnegative weights summing to 1.")
    factors: tuple["QuadratureRule", "QuadratureRule"] | None = Field(
        default=None, description="Per-axis rules when the nodes form a tensor grid."
    )

    @field_validator("thetas", mode="before")
    @classmethod
    def _as_matrix(cls, value) -> np.ndarray:
        array = np.asarray(value, dtype=np.float64)
        if array.ndim == 1:
            array = array[:, None]
        return array

    @field_validator("weights", mode="before")
    @classmethod
    def _as_vector(cls, value) -> np.ndarray:
        return np.asarray(value, dtype=np.float64).reshape(-1)

    @model_validator(mode="after")
    def _check(self) -> "QuadratureRule":
        if self.thetas.shape[0] != self.weights.shape[0]:
            raise ValueError(f"{self.thetas.shape[0]} nodes but {self.weights.shape[0]} weights")
        if np.any(self.weights < 0):
            raise ValueError("quadrature weights must be nonnegative")
        if abs(self.weights.sum() - 1.0) > 1e-10:
            raise ValueError(f"quadrature weights sum to {self.weights.sum()!r}, expected 1")
        return self

    @property
    def arity(self) -> int:
        return int(self.thetas.shape[1])

    def __len__(self) -> int:
        return int(self.weights.shape[0])

    @property
    def nodes(self) -> Iterator[tuple[np.ndarray, float]]:
        """Iterate (theta, weight) pairs in ascending node order."""
        for k in range(len(self)):
            yield self.thetas[k], float(self.weights[k])

    def expect(self, values: np.ndarray) -> float:
        """Weighted sum of per-node values."""
        return float(np.dot(self.weights, np.asarray(values, dtype=np.float64)))


QuadratureRule.model_rebuild()
