from augmoments.models.transform import TransformKind

from .Rotation import RotationWarp as RotationWarp
from .Shear import ShearHorizontalWarp as ShearHorizontalWarp
from .Shear import ShearVerticalWarp as ShearVerticalWarp
from .Shear import ShearWarp as ShearWarp
from .Translation import TranslationWarp as TranslationWarp
from .Warp import Warp as Warp
from .Zoom import ZoomWarp as ZoomWarp

# Registry of available warps
warps: dict[TransformKind, Warp] = {
    TransformKind.TRANSLATION: TranslationWarp(),
    TransformKind.SHEAR_HORIZONTAL: ShearHorizontalWarp(),
    TransformKind.SHEAR_VERTICAL: ShearVerticalWarp(),
    TransformKind.SHEAR: ShearWarp(),
    TransformKind.ROTATION: RotationWarp(),
    TransformKind.ZOOM: ZoomWarp(),
}


def get_warp(kind: TransformKind | str) -> Warp:
    """Look up the warp for a kind or its CLI name."""
    return warps[TransformKind(kind)]
