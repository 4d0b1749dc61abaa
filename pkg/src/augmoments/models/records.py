"""Records emitted by the Monte-Carlo harness."""

# stdlib
from typing import Literal

# third party
from pydantic import BaseModel, Field


class ConvergenceRecord(BaseModel):
    """Error of one Monte-Carlo run against the analytical quantities."""

    n_samples: int = Field(..., ge=1, description="Number of sampled augmentations.")
    run_index: int = Field(..., ge=0, description="Index of the independent run.")
    image_l2_error: float = Field(..., ge=0, description="l2 distance between MC and exact expected image.")
    loss_abs_error: float | None = Field(
        default=None, ge=0, description="|MC loss - expected loss| if a model was given."
    )
    seed: int = Field(..., description="Seed of the generator stream used by this run.")


AugmentationCount = int | Literal["analytic", "closed_form"]


class TrainCurve(BaseModel):
    """Test metrics of one training run after one epoch."""

    train_size: int = Field(..., ge=1, description="Number of training samples.")
    n_aug: AugmentationCount = Field(..., description="Augmentations per sample per epoch, or the exact modes.")
    epoch: int = Field(..., ge=0, description="Epoch index; 0 is the initialization.")
    test_mse: float = Field(..., ge=0, description="Mean squared error on one-hot test targets.")
    test_accuracy: float = Field(..., ge=0, le=1, description="Argmax accuracy on the test set.")
    seed: int = Field(..., description="Seed of the run.")
