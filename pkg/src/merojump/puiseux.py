"""Newton polygons and Puiseux expansions of plane curve germs.

A branch is parametrized as ``x = t^e``, ``y = sum a_k t^k``.  Conjugate
branches are expanded once over a number field and carry a class size.
Branches contained in ``x = 0`` are reported with ``swapped=True``: there the
roles of ``x`` and ``y`` are exchanged and the series is ``x = 0``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import comb

from .exact.bivariate import BivariatePolynomial, factor_rational
from .exact.fields import RATIONALS, NumberField, adjoin_root, factor

INFINITE = None  # exponent of a branch that terminates exactly


class InsufficientPrecision(ArithmeticError):
    """The requested truncation does not separate the branches."""


class NoSingularityError(ValueError):
    """The polynomial does not vanish at the origin."""


@dataclass(frozen=True)
class Edge:
    start: tuple          # (i, j) with the larger j
    end: tuple
    inclination: Fraction | None  # None for a single vertex
    polynomial: tuple     # coefficients of the edge polynomial, low -> high


@dataclass(frozen=True)
class NewtonPolygon:
    points: tuple
    edges: tuple

    @property
    def inclinations(self):
        return [e.inclination for e in self.edges if e.inclination is not None]


def _support(d):
    return sorted(d)


def _lower_hull(points):
    """Compact lower-left edges from the leftmost point down to ``min j``."""
    pts = set(points)
    start = min(pts, key=lambda p: (p[0], p[1]))
    jmin = min(p[1] for p in pts)
    edges = []
    cur = start
    while cur[1] > jmin:
        best = None
        for p in pts:
            if p[1] >= cur[1]:
                continue
            slope = Fraction(p[0] - cur[0], cur[1] - p[1])
            if best is None or slope < best[0] or (slope == best[0] and p[1] < best[1][1]):
                best = (slope, p)
        edges.append((cur, best[1], best[0]))
        cur = best[1]
    return start, edges


def _edge_polynomial(d, start, end, slope):
    q = slope.denominator
    coeffs = [0] * ((start[1] - end[1]) // q + 1)
    for (i, j), c in d.items():
        if (i - start[0]) * q == slope.numerator * (start[1] - j) and end[1] <= j <= start[1]:
            coeffs[(j - end[1]) // q] = c
    return coeffs


def newton_polygon(p: BivariatePolynomial) -> NewtonPolygon:
    """Lower convex hull of the support of ``p`` together with edge polynomials."""
    if p.is_zero():
        raise ValueError("Newton polygon of the zero polynomial")
    if p.value_at_origin() != 0:
        raise NoSingularityError("no singularity at origin: the polynomial is a unit there")
    d = dict(p.items())
    start, hull = _lower_hull(d)
    if not hull:
        return NewtonPolygon(tuple(_support(d)), (Edge(start, start, None, (d[start],)),))
    edges = tuple(Edge(a, b, s, tuple(_edge_polynomial(d, a, b, s))) for a, b, s in hull)
    return NewtonPolygon(tuple(_support(d)), edges)


@dataclass(frozen=True)
class PuiseuxBranch:
    """A conjugacy class of branches ``x = t^e, y = sum a_k t^k``."""

    e: int
    terms: tuple                 # ((k, a_k), ...) with k strictly increasing, a_k != 0
    class_size: int
    factor: int                  # index of the irreducible factor over Q
    field: NumberField = dc_field(compare=False)
    exact: bool = False          # the series is the whole branch
    precision: int | None = 0    # every term with t-exponent <= precision is known
    swapped: bool = False        # branch of x = 0 (variables exchanged)
    steps: tuple = dc_field(default=(), compare=False)
    run: int = dc_field(default=0, compare=False)

    def exponents(self):
        return [Fraction(k, self.e) for k, _ in self.terms]

    def coefficients(self):
        return [a for _, a in self.terms]

    def series_at(self, t_power_limit=None):
        return [(k, a) for k, a in self.terms if t_power_limit is None or k <= t_power_limit]

    def __str__(self):
        if self.swapped:
            return "x = 0"
        if not self.terms:
            return f"e={self.e}: y = 0"
        body = " + ".join(f"({a})*x^({Fraction(k, self.e)})" for k, a in self.terms)
        return f"e={self.e}: y = {body}"


@dataclass
class _State:
    parts: list          # factors F_k(s, w) with x = s^E, y = prefix + s^A * w
    ids: list            # rational factor index of each part
    field: NumberField
    E: int
    A: int
    terms: list
    size: int
    steps: list


_runs = itertools.count(1)
_nodes = itertools.count(1)


def _substitute(d, p, q, c):
    """``s^(-L) F(s^q, s^p (c + w))`` with ``L`` the least weighted degree."""
    L = min(q * i + p * j for (i, j) in d)
    out = {}
    for (i, j), a in d.items():
        base = q * i + p * j - L
        for k in range(j + 1):
            coeff = a * (comb(j, k) * c ** (j - k))
            if coeff != 0:
                key = (base, k)
                out[key] = out.get(key, 0) + coeff
    return {k: v for k, v in out.items() if v != 0}


def _product(parts):
    acc = {(0, 0): 1}
    for d in parts:
        nxt = {}
        for (i1, j1), a in acc.items():
            for (i2, j2), b in d.items():
                key = (i1 + i2, j1 + j2)
                nxt[key] = nxt.get(key, 0) + a * b
        acc = {k: v for k, v in nxt.items() if v != 0}
    return acc


def _y_order_at_origin(d):
    return min((j for (i, j) in d if i == 0), default=None)


def _branch(state, node, kind, fid, exact, precision, run):
    return PuiseuxBranch(state.E, tuple(state.terms), state.size, fid, state.field, exact=exact,
                         precision=precision, steps=tuple(state.steps + [(node, kind, INFINITE)]),
                         run=run)


def _expand(state: _State, limit: Fraction, run: int, out: list):
    """Depth-first expansion; ``limit`` bounds the ``x``-exponent of known terms."""
    node = next(_nodes)
    parts, ids = [], []
    for d, fid in zip(state.parts, state.ids):
        if (0, 0) in d:
            continue  # unit: no branch of this factor passes here
        if all(j > 0 for (_, j) in d):
            # w = 0 is a branch: the prefix is the whole series
            out.append(_branch(state, node, ("ray", fid), fid, True, None, run))
            d = {(i, j - 1): a for (i, j), a in d.items()}
            if (0, 0) in d:
                continue
        parts.append(d)
        ids.append(fid)
    if not parts:
        return
    d = _product(parts)
    order = _y_order_at_origin(d)
    if Fraction(state.A, state.E) >= limit:
        if order > 1:
            raise InsufficientPrecision(
                f"truncation {limit} reached before the branches separate")
        out.append(_branch(state, node, "stop", ids[0], False, state.A, run))
        return
    _, hull = _lower_hull(d)
    K = state.field
    for a, b, slope in hull:
        p, q = slope.numerator, slope.denominator
        phi = [K.coerce(c) for c in _edge_polynomial(d, a, b, slope)]
        for psi, _ in factor(K, phi):
            K1, emb1, T = adjoin_root(K, psi)
            # any q-th root c of T gives the same branch
            chi = factor(K1, [-T] + [K1.coerce(0)] * (q - 1) + [K1.coerce(1)])[0][0]
            K2, emb2, c = adjoin_root(K1, chi)
            emb = emb1.compose(emb2)

            def lift(v):
                return v if K2 is K else emb(v)

            new_parts = [_substitute({k: lift(v) for k, v in part.items()}, p, q, c) for part in parts]
            newA = q * state.A + p
            newE = q * state.E
            terms = [(q * k, lift(v)) for k, v in state.terms] + [(newA, c)]
            key = (slope, tuple(str(x) for x in psi))
            _expand(_State(new_parts, ids, K2, newE, newA, terms, state.size * (len(psi) - 1),
                           state.steps + [(node, key, Fraction(newA, newE))]), limit, run, out)


def puiseux_branches(p: BivariatePolynomial, truncation=None) -> list[PuiseuxBranch]:
    """Puiseux branches of a reduced germ at the origin, one per conjugacy class.

    ``truncation`` bounds the ``x``-exponent up to which every term is known.
    With ``truncation=None`` the bound is doubled until the branches
    separate, then doubled once more as a guard.
    """
    if p.is_zero():
        raise ValueError("Puiseux expansion of the zero polynomial")
    if p.value_at_origin() != 0:
        raise NoSingularityError("no singularity at origin: the polynomial is a unit there")
    if truncation is None:
        t = 2
        while True:
            try:
                puiseux_branches(p, t)
                return puiseux_branches(p, 2 * t)
            except InsufficientPrecision:
                t *= 2
                if t > 2**10:
                    raise
    truncation = Fraction(truncation)
    if truncation <= 0:
        raise ValueError("truncation must be positive")
    run = next(_runs)
    factors = []
    for f, m in factor_rational(p):
        if f.value_at_origin() != 0:
            continue
        if m > 1:
            raise ValueError("input must be reduced (squarefree)")
        factors.append(f)
    out = []
    graph, ids = [], []
    for idx, f in enumerate(factors):
        if f.degree_in("y") == 0:
            # f is x up to a unit: the branch x = 0
            out.append(PuiseuxBranch(1, (), 1, idx, RATIONALS, exact=True, precision=None,
                                     swapped=True, steps=((0, ("axis", idx), INFINITE),), run=run))
        else:
            graph.append(dict(f.items()))
            ids.append(idx)
    if graph:
        _expand(_State(graph, ids, RATIONALS, 1, 0, [], 1, []), truncation, run, out)
    return out


def _series_power(terms, n, cap, one):
    """``(sum a_k t^k)^n`` truncated to exponents ``<= cap``, as a dict."""
    result = {0: one}
    base = dict(terms)
    while n:
        if n & 1:
            result = _mul_trunc(result, base, cap)
        n >>= 1
        if n:
            base = _mul_trunc(base, base, cap)
    return result


def _mul_trunc(a, b, cap):
    out = {}
    for i, x in a.items():
        for j, y in b.items():
            if i + j <= cap:
                out[i + j] = out.get(i + j, 0) + x * y
    return {k: v for k, v in out.items() if v != 0}


def _compose(q: BivariatePolynomial, br: PuiseuxBranch, cap: int) -> dict:
    """``q(t^e, y(t))`` truncated to exponents ``<= cap``."""
    K = br.field
    one = K.coerce(1)
    total = {}
    powers = {}
    for (i, j), a in q.items():
        if j not in powers:
            powers[j] = _series_power(br.terms, j, cap, one) if j else {0: one}
        shift = br.e * i
        for k, v in powers[j].items():
            if k + shift <= cap:
                total[k + shift] = total.get(k + shift, 0) + K.coerce(a) * v
    return {k: v for k, v in total.items() if v != 0}


def _cap(q: BivariatePolynomial, br: PuiseuxBranch) -> int:
    if br.exact:
        top = max((k for k, _ in br.terms), default=0)
        return br.e * q.degree_in("x") + top * q.degree_in("y")
    return br.precision


def order_along(q: BivariatePolynomial, br: PuiseuxBranch):
    """``ord_t q(t^e, y(t))``, or ``None`` when the known terms cannot certify it.

    For a truncated branch the error in ``y`` is ``O(t^(precision+1))``, so an
    order up to ``precision`` is exact.  ``None`` is also returned when ``q``
    vanishes on an exact branch.
    """
    if br.swapped:
        vals = [j for (i, j), _ in q.items() if i == 0]
        return min(vals) if vals else None
    total = _compose(q, br, _cap(q, br))
    return min(total) if total else None


def intersection_multiplicity(br: PuiseuxBranch, q: BivariatePolynomial) -> int:
    """Intersection number of the whole conjugacy class with ``q`` at the origin."""
    o = order_along(q, br)
    if o is None:
        raise InsufficientPrecision("branch precision too low to certify the intersection number")
    return o * br.class_size


def verify_branch(br: PuiseuxBranch, p: BivariatePolynomial) -> bool:
    """``p(t^e, y(t))`` vanishes modulo ``t^(precision + 1)`` (identically if exact)."""
    if br.swapped:
        return all(i > 0 for (i, _), _ in p.items())
    return not _compose(p, br, _cap(p, br))


def _self_contact(b: PuiseuxBranch):
    best = None
    for dd in range(2, b.e + 1):
        if b.e % dd:
            continue
        ks = [k for k, a in b.terms if k % dd]
        if ks:
            v = Fraction(min(ks), b.e)
            best = v if best is None else max(best, v)
    for node, choice, exp in b.steps:
        if isinstance(choice[0], Fraction) and len(choice[1]) > 2:
            best = exp if best is None else max(best, exp)
    if best is None:
        raise InsufficientPrecision("the two parametrizations agree to full truncation")
    return best


def branch_contact(b1: PuiseuxBranch, b2: PuiseuxBranch) -> Fraction:
    """Largest exponent up to which some pair of conjugate parametrizations agree.

    Both branches must come from the same expansion run (expand the product
    of the curves to compare branches of different curves).  For the same
    class the comparison runs over its distinct conjugate parametrizations.
    """
    if b1.swapped or b2.swapped:
        if b1.swapped and b2.swapped:
            raise InsufficientPrecision("both branches are the axis x = 0")
        other = b2 if b1.swapped else b1
        if not other.terms:
            return Fraction(1)
        lead = Fraction(other.terms[0][0], other.e)
        return Fraction(1) if lead >= 1 else 1 / lead
    if b1.run != b2.run:
        raise ValueError("branches come from different expansions; expand the product of the curves")
    s1, s2 = b1.steps, b2.steps
    for (n1, c1, e1), (n2, c2, e2) in zip(s1, s2):
        if (n1, c1) != (n2, c2):
            cands = [e for e in (e1, e2) if e is not INFINITE]
            if not cands:
                raise InsufficientPrecision("branches not separated")
            return min(cands)
    return _self_contact(b1)
