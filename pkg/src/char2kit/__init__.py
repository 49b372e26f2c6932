"""Characteristic-2 computational algebra toolkit.

Exact verification machinery for exponential sums over GF(2^m), five-valued
cross-correlation distributions of decimated m-sequences, point counts of
projective plane curves over F_{2^s}, and L-polynomial identities via
Newton's identities.
"""

from .gf2m import Field, FieldError, decimation_exponent, get_field

__version__ = "0.1.0"

__all__ = ["Field", "FieldError", "decimation_exponent", "get_field", "__version__"]
