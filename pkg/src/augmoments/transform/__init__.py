"""Coordinate warps, sparse data-space operators and the coordinate-space reference transform."""

from .apply_operator import apply_operator as apply_operator
from .build_operator import build_axis_operator as build_axis_operator
from .build_operator import build_operator as build_operator
from .reference_transform import reference_transform as reference_transform
from .reference_transform import transform_stack as transform_stack
from .reference_transform import warp_batch as warp_batch
from .warp_coord import warp_coord as warp_coord
