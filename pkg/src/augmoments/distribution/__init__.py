"""Parameter densities, quadrature rules and seeded sampling."""

from .density import density as density
from .parse_distribution import parse_distribution as parse_distribution
from .quadrature import DEFAULT_NODES as DEFAULT_NODES
from .quadrature import GAUSSIAN_TRUNCATION as GAUSSIAN_TRUNCATION
from .quadrature import quadrature as quadrature
from .quadrature import support as support
from .sample import make_rng as make_rng
from .sample import sample as sample
from .sample import sample_many as sample_many
from .scale import scale_distribution as scale_distribution
