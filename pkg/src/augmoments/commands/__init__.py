"""Subcommands: each takes the running Experiment and writes its outputs through it."""

from .eigvecs import eigvecs_command as eigvecs_command
from .expected_image import expected_image_command as expected_image_command
from .expected_loss import expected_loss_command as expected_loss_command
from .expected_operator import expected_operator_command as expected_operator_command
from .mc_converge import mc_converge_command as mc_converge_command
from .optimal_w import optimal_w_command as optimal_w_command
from .rank_sweep import rank_sweep_command as rank_sweep_command
from .train_linear import train_linear_command as train_linear_command
from .variance_map import variance_map_command as variance_map_command

# Registry of subcommands by CLI name
commands = {
    "expected-image": expected_image_command,
    "expected-operator": expected_operator_command,
    "variance-map": variance_map_command,
    "eigvecs": eigvecs_command,
    "rank-sweep": rank_sweep_command,
    "mc-converge": mc_converge_command,
    "train-linear": train_linear_command,
    "expected-loss": expected_loss_command,
    "optimal-w": optimal_w_command,
}
