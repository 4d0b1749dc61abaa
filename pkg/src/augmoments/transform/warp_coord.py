"""Source coordinate read by a target coordinate under t_theta."""

# local
from augmoments.models.transform import TransformKind
from augmoments.Warps import get_warp


def warp_coord(
    kind: TransformKind | str, theta: float | tuple[float, float], p: tuple[float, float]
) -> tuple[float, float]:
    """Return t_theta(u, v) for the target point p = (u, v)."""
    warp = get_warp(kind)
    x, y = warp.source(warp.as_theta(theta), p[0], p[1])
    return float(x), float(y)
