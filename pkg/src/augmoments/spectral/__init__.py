"""Spectral analysis of augmentation variances."""

from .eig_sym import RANK_TOLERANCE as RANK_TOLERANCE
from .eig_sym import eig_sym as eig_sym
from .eig_sym import numerical_rank as numerical_rank
from .rank_sweep import rank_linearity as rank_linearity
from .rank_sweep import rank_sweep as rank_sweep
from .rank_sweep import symmetric_uniform as symmetric_uniform
from .subspace_iteration import subspace_iteration as subspace_iteration
from .top_eigvec_images import top_eigvec_images as top_eigvec_images
