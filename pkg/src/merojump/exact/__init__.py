"""Exact arithmetic: rationals, number fields, univariate and bivariate polynomials."""

from fractions import Fraction as Rational

from .bivariate import (
    BivariatePolynomial,
    factor_rational,
    poly_gcd,
    squarefree_part,
)
from .fields import RATIONALS, FieldElement, NumberField, adjoin_root, factor
from .parser import PolynomialSyntaxError, parse_polynomial, parse_rational
from .roots import univariate_roots_with_multiplicity

__all__ = [
    "Rational",
    "BivariatePolynomial",
    "poly_gcd",
    "squarefree_part",
    "factor_rational",
    "NumberField",
    "FieldElement",
    "RATIONALS",
    "adjoin_root",
    "factor",
    "parse_polynomial",
    "parse_rational",
    "PolynomialSyntaxError",
    "univariate_roots_with_multiplicity",
]
