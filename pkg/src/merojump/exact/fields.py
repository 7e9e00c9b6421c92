"""Exact number fields: the rationals and simple algebraic extensions.

Every field is stored as a simple extension ``Q(theta)`` of the rationals.
Adjoining a root of a polynomial over an extension computes a primitive
element (Trager's norm method), so elements stay small dense vectors over
``Q``; the sequence of polynomials that were adjoined is kept in
``NumberField.tower`` for reporting.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

import sympy

from . import univariate as up


class NumberField:
    """``Q[t] / (modulus)`` with ``modulus`` monic and irreducible over ``Q``.

    The rationals are the degree-one field ``RATIONALS``; its elements are
    plain :class:`Fraction` values rather than :class:`FieldElement`.
    """

    _counter = itertools.count(1)

    def __init__(self, modulus, tower=(), name=None):
        modulus = up.monic([Fraction(c) for c in modulus])
        self.modulus = tuple(modulus)
        self.degree = len(modulus) - 1
        self.tower = tuple(tower)
        if name is None:
            name = "Q" if self.degree == 1 else f"a{next(NumberField._counter)}"
        self.name = name

    @property
    def is_rational(self) -> bool:
        return self.degree == 1

    @property
    def gen(self):
        if self.is_rational:
            return -self.modulus[0]
        return FieldElement(self, (Fraction(0), Fraction(1)))

    def element(self, coeffs):
        if self.is_rational:
            return Fraction(coeffs[0]) if coeffs else Fraction(0)
        return FieldElement(self, _reduce(coeffs, self.modulus))

    def coerce(self, value):
        """Bring an int, Fraction or element of this field into the field."""
        if isinstance(value, FieldElement):
            if value.field is not self:
                raise ValueError(f"element of {value.field.name} used in {self.name}")
            return value
        if self.is_rational:
            return Fraction(value)
        return self.element([value])

    def coordinates(self, value):
        """Coordinates of ``value`` in the power basis, padded to ``degree``."""
        value = self.coerce(value)
        if self.is_rational:
            return [value]
        c = list(value.coeffs)
        return c + [Fraction(0)] * (self.degree - len(c))

    def __repr__(self):
        if self.is_rational:
            return "NumberField(Q)"
        return f"NumberField({self.name}: {_poly_str(self.modulus, 't')})"


RATIONALS = NumberField([0, 1], name="Q")


def _reduce(coeffs, modulus):
    coeffs = up.trim([Fraction(c) for c in coeffs])
    if len(coeffs) >= len(modulus):
        coeffs = up.divmod_(coeffs, list(modulus))[1]
    return tuple(coeffs)


def _poly_str(coeffs, var):
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c == 0:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if mono and c == 1:
            terms.append(f"+{mono}")
        elif mono and c == -1:
            terms.append(f"-{mono}")
        else:
            cs = str(c)
            sign = "" if cs.startswith("-") else "+"
            terms.append(f"{sign}{cs}{'*' + mono if mono else ''}")
    s = "".join(terms) or "0"
    return s[1:] if s.startswith("+") else s


class FieldElement:
    """Immutable element of a proper extension ``Q(theta)``."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: NumberField, coeffs):
        self.field = field
        self.coeffs = tuple(coeffs)

    def _other(self, other):
        if isinstance(other, FieldElement):
            if other.field is not self.field:
                raise ValueError("mixing elements of different number fields")
            return other.coeffs
        if isinstance(other, (int, Fraction)):
            return (Fraction(other),) if other != 0 else ()
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.field, tuple(up.add(self.coeffs, o)))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.field, tuple(up.sub(self.coeffs, o)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return FieldElement(self.field, ())
            return FieldElement(self.field, tuple(c * other for c in self.coeffs))
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.field, _reduce(up.mul(self.coeffs, o), self.field.modulus))

    __rmul__ = __mul__

    def inverse(self):
        if not self.coeffs:
            raise ZeroDivisionError("inverse of zero in a number field")
        g, s, _ = up.ext_gcd(list(self.coeffs), list(self.field.modulus))
        # modulus irreducible => g == 1
        return FieldElement(self.field, _reduce(s, self.field.modulus))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        if isinstance(other, FieldElement):
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = FieldElement(self.field, (Fraction(1),))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field is other.field and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return not self.coeffs
            return self.coeffs == (Fraction(other),)
        return NotImplemented

    def __hash__(self):
        if len(self.coeffs) <= 1:
            return hash(self.coeffs[0] if self.coeffs else Fraction(0))
        return hash((id(self.field), self.coeffs))

    def is_rational(self) -> bool:
        return len(self.coeffs) <= 1

    def __repr__(self):
        return f"({_poly_str(self.coeffs, self.field.name)})"

    __str__ = __repr__


def is_zero(c) -> bool:
    return c == 0


class Embedding:
    """Field homomorphism ``K -> L`` fixed by the image of ``K``'s generator."""

    def __init__(self, source: NumberField, target: NumberField, image):
        self.source = source
        self.target = target
        self.image = target.coerce(image) if not source.is_rational else None

    def __call__(self, value):
        if isinstance(value, FieldElement):
            if value.field is not self.source:
                raise ValueError("embedding applied to a foreign element")
            if self.source is self.target:
                return value
            acc = self.target.coerce(0)
            power = self.target.coerce(1)
            for c in value.coeffs:
                acc = acc + power * c
                power = power * self.image
            return acc
        return self.target.coerce(value)

    def compose(self, after: "Embedding") -> "Embedding":
        """Return ``after o self``."""
        if self.source.is_rational:
            return Embedding(self.source, after.target, None)
        return Embedding(self.source, after.target, after(self.image))


def identity(field: NumberField) -> Embedding:
    return Embedding(field, field, None if field.is_rational else field.gen)


# -- norms and factorization ----------------------------------------------

_Y, _T = sympy.symbols("y t")


def norm(field: NumberField, p):
    """Norm ``N_{K/Q}(p)`` of ``p in K[t]`` as a rational coefficient list."""
    if field.is_rational:
        return [Fraction(c) for c in p]
    expr_terms = {}
    for k, c in enumerate(p):
        for i, a in enumerate(field.coordinates(c)):
            if a != 0:
                expr_terms[(i, k)] = sympy.Rational(a.numerator, a.denominator)
    big = sympy.Poly.from_dict(expr_terms, _Y, _T, domain=sympy.QQ)
    mod = sympy.Poly(list(reversed([sympy.Rational(c.numerator, c.denominator) for c in field.modulus])), _Y, domain=sympy.QQ)
    res = sympy.resultant(mod.as_expr(), big.as_expr(), _Y)
    res = sympy.Poly(res, _T, domain=sympy.QQ)
    return up.trim([Fraction(int(c.numerator), int(c.denominator)) for c in reversed(res.all_coeffs())])


def _shifts():
    yield 0
    for s in itertools.count(1):
        yield s
        yield -s


def factor_squarefree(field: NumberField, p):
    """Monic irreducible factors of a squarefree ``p`` over ``field``."""
    p = up.monic([field.coerce(c) for c in p])
    if len(p) <= 1:
        return []
    if len(p) == 2:
        return [p]
    if field.is_rational:
        return [f for f, _ in up.factor_rational(p)]
    theta = field.gen
    for s in _shifts():
        q = up.compose_linear(p, field.coerce(1), -s * theta)
        n = norm(field, q)
        if up.is_squarefree(n):
            break
    out = []
    for nf, _ in up.factor_rational(n):
        g = up.gcd(q, [field.coerce(c) for c in nf])
        if len(g) > 1:
            out.append(up.monic(up.compose_linear(g, field.coerce(1), s * theta)))
    return out


def factor(field: NumberField, p):
    """Irreducible factorization over ``field``: ``[(monic factor, mult)]``."""
    out = []
    for part, mult in up.squarefree_decomposition([field.coerce(c) for c in p]):
        for f in factor_squarefree(field, part):
            out.append((f, mult))
    out.sort(key=lambda fm: (len(fm[0]), _sort_key(fm[0])))
    return out


def _sort_key(poly):
    key = []
    for c in poly:
        if isinstance(c, FieldElement):
            key.append(tuple((x.numerator, x.denominator) for x in c.coeffs))
        else:
            c = Fraction(c)
            key.append(((c.numerator, c.denominator),))
    return key


def adjoin_root(field: NumberField, psi):
    """Adjoin a root of the irreducible polynomial ``psi`` over ``field``.

    Returns ``(L, embedding K -> L, root in L)``.  A linear ``psi`` returns
    ``field`` itself.
    """
    psi = up.monic([field.coerce(c) for c in psi])
    d = len(psi) - 1
    if d < 1:
        raise ValueError("cannot adjoin a root of a constant")
    if d == 1:
        return field, identity(field), -psi[0]
    if field.is_rational:
        L = NumberField(psi, tower=(tuple(psi),))
        return L, Embedding(field, L, None), L.gen
    theta = field.gen
    for s in _shifts():
        if s == 0:
            continue
        q = up.compose_linear(psi, field.coerce(1), -s * theta)
        r = norm(field, q)
        if up.is_squarefree(r):
            break
    L = NumberField(r, tower=field.tower + (tuple(str(c) for c in psi),))
    delta = L.gen
    # theta_L is the unique common root of modulus(y) and psi(delta - s*y)
    mod_L = [L.coerce(c) for c in field.modulus]
    lin = [delta, L.coerce(-s)]
    acc = []
    for c in reversed(psi):
        coeff_poly = [L.coerce(a) for a in field.coordinates(c)]
        acc = up.add(up.mul(acc, lin), up.trim(coeff_poly))
    g = up.gcd(mod_L, acc)
    if len(g) != 2:
        raise ArithmeticError("primitive element computation failed")
    theta_L = -g[0]
    emb = Embedding(field, L, theta_L)
    beta = delta - theta_L * s
    return L, emb, beta
