"""Closed-form expected losses, their minimizer and delta-method variance estimates."""

from .delta_variance import delta_variance as delta_variance
from .expected_mse import expected_mse as expected_mse
from .expected_mse import expected_mse_grad as expected_mse_grad
from .expected_mse import variance_term as variance_term
from .expected_mse_by_quadrature import expected_mse_by_quadrature as expected_mse_by_quadrature
from .mse_grad_at_mean import mse_grad_at_mean as mse_grad_at_mean
from .mse_grad_at_mean import mse_output_grad as mse_output_grad
from .optimal_linear import optimal_linear as optimal_linear
from .tangentprop_bound import tangentprop_bound as tangentprop_bound
from .taylor_expected_loss import taylor_expected_loss as taylor_expected_loss
from .variance_bound import align_jacobian_kernel as align_jacobian_kernel
from .variance_bound import variance_bound as variance_bound
