"""Run configuration shared by every CLI subcommand and recorded in manifests."""

# stdlib
from os import getenv
from typing import Literal

# third party
from pydantic import BaseModel, Field

# local
from augmoments.models.records import AugmentationCount
from augmoments.models.transform import TransformKind

MNIST_DIR_ENV_VAR = "AUGMOMENTS_MNIST_DIR"


class RunConfig(BaseModel):
    """Every knob of every subcommand; unset knobs keep these defaults."""

    command: str = Field(..., description="Subcommand name, e.g. 'expected-image'.")
    kind: TransformKind | None = Field(default=None, description="Transform family.")
    dist: str | None = Field(default=None, description="Distribution literal; rotation parameters in degrees.")
    axis: Literal["horizontal", "vertical"] | None = Field(
        default=None, description="Axis for scalar translation distributions."
    )
    grid: str = Field(default="64x64", description="Grid as HxW for synthetic inputs.")
    input: str | None = Field(default=None, description="Input PGM image; a synthetic fixture when unset.")
    output: str | None = Field(default=None, description="Primary output path (.pgm, .amtf or .csv).")
    fixture: Literal["noise", "square"] = Field(default="noise", description="Synthetic fixture when no input.")
    cutoff: float = Field(default=0.25, gt=0, le=1, description="Low-pass fraction of the noise fixture.")
    nodes: int = Field(default=129, ge=1, description="Gauss-Legendre nodes per axis for unaligned rules.")
    panel_nodes: int = Field(default=8, ge=1, description="Nodes per panel for kink-aligned rules.")
    aligned: bool = Field(default=True, description="Split quadrature panels at bilinear kinks.")
    analytic: bool = Field(default=False, description="Use the closed-form path where one exists.")
    seed: int = Field(default=0, description="Base seed for fixtures, models and Monte-Carlo draws.")
    threads: int | None = Field(default=None, ge=1, description="Worker cap; AUGMOMENTS_THREADS when unset.")
    k: int = Field(default=8, ge=0, description="Eigenvector images to export.")
    rank: int = Field(default=16, ge=1, description="Eigenpairs kept by the streaming path.")
    iterations: int = Field(default=20, ge=1, description="Subspace iterations of the streaming path.")
    amplitudes: list[float] = Field(
        default_factory=lambda: [float(a) for a in range(16)],
        description="Ascending amplitudes for rank sweeps (degrees for rotation).",
    )
    n_grid: list[int] = Field(default=[10, 100, 1000, 10000], description="Ascending Monte-Carlo sample counts.")
    runs: int = Field(default=10, ge=1, description="Independent Monte-Carlo runs.")
    outputs: int = Field(default=10, ge=1, description="Outputs K of random linear models.")
    train_size: int = Field(default=1000, ge=1, description="Training samples.")
    test_size: int = Field(default=2000, ge=1, description="Test samples.")
    n_aug: list[AugmentationCount] = Field(
        default=[1, 50, "analytic", "closed_form"], description="Training modes to run."
    )
    epochs: int = Field(default=100, ge=0, description="Training epochs.")
    lr: float = Field(default=0.01, ge=0, description="SGD step size.")
    batch_size: int = Field(default=32, ge=1, description="Training samples per SGD step.")
    mnist_dir: str | None = Field(
        default_factory=lambda: getenv(MNIST_DIR_ENV_VAR), description="Directory with the MNIST IDX files."
    )
