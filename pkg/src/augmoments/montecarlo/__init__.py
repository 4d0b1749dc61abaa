"""Seeded Monte-Carlo estimates, convergence sweeps and the augmentation training baseline."""

from .convergence_sweep import convergence_sweep as convergence_sweep
from .mc_expected_image import mc_expected_image as mc_expected_image
from .mc_expected_mse import mc_expected_mse as mc_expected_mse
from .mc_expected_mse import per_draw_losses as per_draw_losses
from .sgd_train_linear import evaluate as evaluate
from .sgd_train_linear import sgd_train_linear as sgd_train_linear
from .streams import run_rng as run_rng
from .streams import run_seed as run_seed
