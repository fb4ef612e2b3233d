"""Sharp spherical configurations, their degree-2 harmonic embeddings, and exact checks."""

from .scalars import QuadScalar, RadicandMismatch, sqrt_rational
from .harmonics import HarmonicSpace, gegenbauer, gegenbauer2, harm_dim
from .gram import GramMatrix
from .configurations import (
    ConfigurationError,
    FormatError,
    PointConfiguration,
    cell600,
    construct,
    cross_section,
    e8_roots,
    golay_code,
    icosahedron,
    kissing_56,
    leech_min_vectors,
    load,
    normalized_gram,
    save,
    schlafli_27,
)

__version__ = "0.1.0"
