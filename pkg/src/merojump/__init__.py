"""Multiplier ideals and jumping numbers of meromorphic germs ``f/g`` in the plane."""

from .exact import BivariatePolynomial, parse_polynomial, parse_rational
from .resolution import ResolutionData, log_resolution, valuation_vector, meromorphic_parts

__all__ = [
    "BivariatePolynomial",
    "parse_polynomial",
    "parse_rational",
    "ResolutionData",
    "log_resolution",
    "valuation_vector",
    "meromorphic_parts",
]
