"""Roots of univariate polynomials, adjoining irrational ones."""

from __future__ import annotations

from dataclasses import dataclass

from . import univariate as up
from .fields import RATIONALS, Embedding, NumberField, adjoin_root, factor


@dataclass(frozen=True)
class Root:
    """One conjugacy class of roots.

    ``value`` lives in ``field``; ``embedding`` maps the input polynomial's
    field into ``field``.  ``class_size`` counts the conjugates that
    ``value`` stands for (the degree of ``minimal_polynomial``).
    """

    value: object
    multiplicity: int
    field: NumberField
    embedding: Embedding
    minimal_polynomial: tuple
    class_size: int


def univariate_roots_with_multiplicity(p, field: NumberField = RATIONALS):
    """All roots of ``p`` (coefficients low degree first) over ``field``.

    Each irreducible factor of degree ``d > 1`` becomes one :class:`Root`
    whose value generates a newly adjoined extension, with ``class_size = d``.
    Output order is deterministic: rational roots by value, then irrational
    classes by minimal polynomial.
    """
    p = up.trim([field.coerce(c) for c in p])
    if not p:
        raise ValueError("roots of the zero polynomial")
    out = []
    for fac, mult in factor(field, p):
        L, emb, value = adjoin_root(field, fac)
        out.append(Root(value, mult, L, emb, tuple(fac), len(fac) - 1))
    return out
