"""Sparse bivariate polynomials in ``x, y`` with exact coefficients."""

from __future__ import annotations

from fractions import Fraction

import sympy

from .fields import FieldElement

_X, _Y = sympy.symbols("x y")


class BivariatePolynomial:
    """Immutable polynomial stored as ``{(i, j): coefficient}`` for ``x^i y^j``.

    Zero coefficients are never stored.  Coefficients are :class:`Fraction`
    unless the polynomial was built over an extension field.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for mono, c in terms.items():
                if c != 0:
                    if isinstance(c, int):
                        c = Fraction(c)
                    clean[(int(mono[0]), int(mono[1]))] = c
        self._terms = clean
        self._hash = None

    # -- constructors ----------------------------------------------------
    @classmethod
    def constant(cls, c):
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, i: int, j: int, c=1):
        return cls({(i, j): c})

    @classmethod
    def x(cls):
        return cls.monomial(1, 0)

    @classmethod
    def y(cls):
        return cls.monomial(0, 1)

    @classmethod
    def parse(cls, text: str) -> "BivariatePolynomial":
        from .parser import parse_polynomial

        return parse_polynomial(text)

    # -- inspection ------------------------------------------------------
    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coefficient(self, i: int, j: int):
        return self._terms.get((i, j), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def degree(self) -> int:
        if not self._terms:
            return -1
        return max(i + j for i, j in self._terms)

    def order(self) -> int:
        """Lowest total degree of a monomial in the support (multiplicity at 0)."""
        if not self._terms:
            raise ValueError("order of the zero polynomial")
        return min(i + j for i, j in self._terms)

    def degree_in(self, var: str) -> int:
        k = 0 if var == "x" else 1
        return max((m[k] for m in self._terms), default=-1)

    def homogeneous_part(self, d: int) -> "BivariatePolynomial":
        return BivariatePolynomial({m: c for m, c in self._terms.items() if m[0] + m[1] == d})

    def leading_monomial(self):
        """Leading monomial in graded-lex order with ``x > y``."""
        return max(self._terms, key=lambda m: (m[0] + m[1], m[0], m[1]))

    def is_rational(self) -> bool:
        return all(not isinstance(c, FieldElement) or c.is_rational() for c in self._terms.values())

    def value_at_origin(self):
        return self._terms.get((0, 0), Fraction(0))

    # -- arithmetic ------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, BivariatePolynomial):
            return other
        if isinstance(other, (int, Fraction, FieldElement)):
            return BivariatePolynomial.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) + c
        return BivariatePolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return BivariatePolynomial({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, 0) + c1 * c2
        return BivariatePolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = BivariatePolynomial.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c):
        return BivariatePolynomial({m: v * c for m, v in self._terms.items()})

    def map_coefficients(self, fn):
        return BivariatePolynomial({m: fn(c) for m, c in self._terms.items()})

    def swap_variables(self):
        return BivariatePolynomial({(j, i): c for (i, j), c in self._terms.items()})

    def evaluate(self, x, y):
        acc = 0
        for (i, j), c in self._terms.items():
            acc = acc + c * x**i * y**j
        return acc

    def __eq__(self, other):
        if isinstance(other, BivariatePolynomial):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == BivariatePolynomial.constant(other)._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- exact division / normalization ----------------------------------
    def normalized(self) -> "BivariatePolynomial":
        """Scale so the graded-lex leading coefficient is 1."""
        if not self._terms:
            return self
        lc = self._terms[self.leading_monomial()]
        return self.scale(Fraction(1) / lc if not isinstance(lc, FieldElement) else lc.inverse())

    def exact_divide(self, other: "BivariatePolynomial") -> "BivariatePolynomial":
        q, r = sympy.div(to_sympy(self), to_sympy(other), _X, _Y, domain=sympy.QQ)
        if r != 0:
            raise ArithmeticError("division is not exact")
        return from_sympy(q)

    def divides(self, other: "BivariatePolynomial") -> bool:
        """True when ``self`` divides ``other`` in Q[x, y]."""
        if self.is_zero():
            return other.is_zero()
        _, r = sympy.div(to_sympy(other), to_sympy(self), _X, _Y, domain=sympy.QQ)
        return r == 0

    # -- display ---------------------------------------------------------
    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"BivariatePolynomial({format_polynomial(self)!r})"


def format_polynomial(p: BivariatePolynomial) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for m in sorted(p._terms, key=lambda m: (m[0] + m[1], m[0], m[1]), reverse=True):
        c = p._terms[m]
        i, j = m
        mono = "*".join(
            s for s in (
                "" if i == 0 else ("x" if i == 1 else f"x^{i}"),
                "" if j == 0 else ("y" if j == 1 else f"y^{j}"),
            ) if s
        )
        if isinstance(c, FieldElement) and not c.is_rational():
            cs = str(c)
            sign = "+"
        else:
            c = Fraction(c.coeffs[0] if isinstance(c, FieldElement) else c)
            sign = "-" if c < 0 else "+"
            c = abs(c)
            cs = str(c)
            if mono and c == 1:
                cs = ""
        body = cs + ("*" if cs and mono else "") + mono if mono else cs
        parts.append((sign, body))
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


# -- sympy bridge (rational coefficients only) ------------------------------

def to_sympy(p: BivariatePolynomial) -> sympy.Poly:
    data = {}
    for m, c in p.items():
        if isinstance(c, FieldElement):
            if not c.is_rational():
                raise ValueError("sympy bridge only handles rational coefficients")
            c = c.coeffs[0] if c.coeffs else Fraction(0)
        data[m] = sympy.Rational(c.numerator, c.denominator)
    if not data:
        return sympy.Poly(0, _X, _Y, domain=sympy.QQ)
    return sympy.Poly.from_dict(data, _X, _Y, domain=sympy.QQ)


def from_sympy(poly) -> BivariatePolynomial:
    poly = sympy.Poly(poly, _X, _Y, domain=sympy.QQ)
    return BivariatePolynomial(
        {m: Fraction(int(c.numerator), int(c.denominator)) for m, c in poly.terms()}
    )


def poly_gcd(p: BivariatePolynomial, q: BivariatePolynomial) -> BivariatePolynomial:
    """Normalized gcd over the rationals (graded-lex leading coefficient 1)."""
    if p.is_zero() and q.is_zero():
        raise ValueError("gcd of two zero polynomials")
    return from_sympy(sympy.gcd(to_sympy(p), to_sympy(q))).normalized()


def squarefree_part(p: BivariatePolynomial) -> BivariatePolynomial:
    """Product of the distinct irreducible factors of ``p``, normalized."""
    if p.is_zero():
        raise ValueError("squarefree part of zero")
    _, facs = sympy.factor_list(to_sympy(p))
    out = BivariatePolynomial.constant(1)
    for f, _ in facs:
        out = out * from_sympy(f)
    return out.normalized()


def factor_rational(p: BivariatePolynomial):
    """Irreducible factors over Q as ``[(normalized factor, multiplicity)]``.

    Constant content is dropped; the order is deterministic (by degree, then
    by printed form).
    """
    if p.is_zero():
        raise ValueError("factorization of zero")
    _, facs = sympy.factor_list(to_sympy(p))
    out = [(from_sympy(f).normalized(), m) for f, m in facs]
    out.sort(key=lambda fm: (fm[0].degree(), str(fm[0])))
    return out
