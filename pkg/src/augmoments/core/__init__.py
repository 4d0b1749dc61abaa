"""Grid index and coordinate conventions shared by all modules."""

from .flat_index import flat_index as flat_index
from .flat_index import unflatten as unflatten
from .pixel_to_coord import coord_to_fractional as coord_to_fractional
from .pixel_to_coord import coord_to_pixel as coord_to_pixel
from .pixel_to_coord import pixel_to_coord as pixel_to_coord
