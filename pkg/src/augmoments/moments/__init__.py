"""Exact first and second moments of augmented images."""

from .breakpoints import aligned_quadrature as aligned_quadrature
from .breakpoints import kink_breakpoints as kink_breakpoints
from .expected_image import expected_image as expected_image
from .expected_operator import expected_operator as expected_operator
from .moment_set import moment_set as moment_set
from .pixel_kernel import kernel_matrix as kernel_matrix
from .pixel_kernel import pair_kernels as pair_kernels
from .pixel_kernel import pixel_kernel as pixel_kernel
from .pooled_moments import pooled_moments as pooled_moments
from .second_moment import second_moment as second_moment
from .shear_expected_analytic import shear_expected_analytic as shear_expected_analytic
from .streaming_moments import streaming_moments as streaming_moments
from .translation_expected_analytic import translation_expected_analytic as translation_expected_analytic
from .translation_second_moment_analytic import (
    translation_second_moment_analytic as translation_second_moment_analytic,
)
