"""Exact verification tools for minimal spectral radii of skew-reciprocal
nonnegative integer matrices."""

from .errors import InvalidArgument, ResourceLimit, SkewradError, UnsupportedShape, VerificationFailure
from .poly import IntPoly, RootBracket, is_skew_reciprocal, largest_real_root, skew_star
from .matrix import IntMatrix, char_poly, companion, is_primitive, spectral_radius
from .families import lambda_poly, mu_poly, trinomial_pair

__all__ = [
    "IntMatrix", "IntPoly", "InvalidArgument", "ResourceLimit", "RootBracket", "SkewradError",
    "UnsupportedShape", "VerificationFailure", "char_poly", "companion", "is_primitive",
    "is_skew_reciprocal", "lambda_poly", "largest_real_root", "mu_poly", "skew_star",
    "spectral_radius", "trinomial_pair",
]
