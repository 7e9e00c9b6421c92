"""Dense univariate polynomials over an exact field.

A polynomial is a list of coefficients, lowest degree first, with no
trailing zeros; the zero polynomial is ``[]``.  Coefficients may be
:class:`fractions.Fraction` or :class:`~merojump.exact.fields.FieldElement`;
every routine here only uses ring operations, division and ``== 0``.
"""

from __future__ import annotations

from fractions import Fraction

import sympy


def inverse(c):
    """Multiplicative inverse that never leaves exact arithmetic."""
    if isinstance(c, int):
        return Fraction(1, c)
    return c ** -1


def trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def degree(p) -> int:
    return len(p) - 1


def add(p, q):
    n = max(len(p), len(q))
    out = [(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)]
    return trim(out)


def sub(p, q):
    n = max(len(p), len(q))
    out = [(p[i] if i < len(p) else 0) - (q[i] if i < len(q) else 0) for i in range(n)]
    return trim(out)


def scale(p, c):
    if c == 0:
        return []
    return [a * c for a in p]


def mul(p, q):
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] = out[i + j] + a * b
    return trim(out)


def divmod_(p, q):
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    p = list(p)
    lead_inv = inverse(q[-1])
    dq = len(q) - 1
    quot = [0] * max(len(p) - dq, 0)
    while len(p) - 1 >= dq and p:
        c = p[-1] * lead_inv
        shift = len(p) - 1 - dq
        quot[shift] = c
        for i, b in enumerate(q):
            p[shift + i] = p[shift + i] - c * b
        p.pop()
        p = trim(p)
    return trim(quot), p


def monic(p):
    if not p:
        return []
    inv = inverse(p[-1])
    return [a * inv for a in p[:-1]] + [p[-1] * inv]


def gcd(p, q):
    p, q = trim(p), trim(q)
    while q:
        p, q = q, divmod_(p, q)[1]
    return monic(p)


def ext_gcd(p, q):
    """Return ``(g, s, t)`` with ``s*p + t*q == g`` and ``g`` monic."""
    r0, r1 = trim(p), trim(q)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        quo, rem = divmod_(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, sub(s0, mul(quo, s1))
        t0, t1 = t1, sub(t0, mul(quo, t1))
    if not r0:
        return [], [], []
    inv = inverse(r0[-1])
    return scale(r0, inv), scale(s0, inv), scale(t0, inv)


def derivative(p):
    return trim([p[i] * i for i in range(1, len(p))])


def evaluate(p, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def compose_linear(p, a, b):
    """Return ``p(a*t + b)``."""
    out = []
    lin = trim([b, a])
    for c in reversed(p):
        out = add(mul(out, lin), [c] if c != 0 else [])
    return out


def squarefree_decomposition(p):
    """Yun's algorithm (characteristic zero).

    Returns a list of ``(factor, multiplicity)`` with monic, pairwise coprime,
    squarefree factors.
    """
    p = monic(trim(p))
    if len(p) <= 1:
        return []
    out = []
    dp = derivative(p)
    a = gcd(p, dp)
    b = divmod_(p, a)[0]
    c = divmod_(dp, a)[0]
    d = sub(c, derivative(b))
    i = 1
    while len(b) > 1:
        a = gcd(b, d)
        if len(a) > 1:
            out.append((a, i))
        b = divmod_(b, a)[0]
        c = divmod_(d, a)[0]
        d = sub(c, derivative(b))
        i += 1
    return out


def factor_rational(p):
    """Irreducible factorization over the rationals.

    Returns ``[(monic factor, multiplicity), ...]`` sorted by degree and then
    coefficients, so the output is deterministic.
    """
    p = trim([Fraction(c) for c in p])
    if len(p) <= 1:
        return []
    t = sympy.Symbol("t")
    poly = sympy.Poly(list(reversed(p)), t, domain=sympy.QQ)
    _, facs = poly.factor_list()
    out = []
    for fac, mult in facs:
        coeffs = [Fraction(int(c.numerator), int(c.denominator)) for c in reversed(fac.all_coeffs())]
        out.append((monic(coeffs), mult))
    out.sort(key=lambda fm: (len(fm[0]), [(c.numerator, c.denominator) for c in fm[0]]))
    return out


def is_squarefree(p) -> bool:
    return len(gcd(p, derivative(p))) <= 1
