"""Divisors supported on the exceptional components and affine branches."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import ceil, floor

from .resolution import ResolutionData, affine_orders, valuation_vector


def _frac(v) -> Fraction:
    return v if isinstance(v, Fraction) else Fraction(v)


@dataclass(frozen=True)
class Divisor:
    """``sum exc[i] E_i + sum aff[b] B_b`` on a fixed resolution.

    ``exc`` is indexed by exceptional components and ``aff`` by the affine
    branches of the resolution (strict transforms of ``f*g``).
    """

    res: ResolutionData
    exc: tuple
    aff: tuple

    def __post_init__(self):
        if len(self.exc) != self.res.size or len(self.aff) != len(self.res.affine_branches):
            raise ValueError("divisor does not match the resolution")
        object.__setattr__(self, "exc", tuple(_frac(v) for v in self.exc))
        object.__setattr__(self, "aff", tuple(_frac(v) for v in self.aff))

    @classmethod
    def zero(cls, res):
        return cls(res, (0,) * res.size, (0,) * len(res.affine_branches))

    @classmethod
    def of(cls, res, exc, aff=None):
        return cls(res, tuple(exc), tuple(aff) if aff is not None else (0,) * len(res.affine_branches))

    @classmethod
    def unit(cls, res, i):
        exc = [0] * res.size
        exc[i] = 1
        return cls.of(res, exc)

    def __eq__(self, other):
        if not isinstance(other, Divisor):
            return NotImplemented
        return self.exc == other.exc and self.aff == other.aff

    def __hash__(self):
        return hash((self.exc, self.aff))

    def _check(self, other):
        if other.res.size != self.res.size or len(other.aff) != len(self.aff):
            raise ValueError("divisors live on different resolutions")

    def __add__(self, other):
        self._check(other)
        return Divisor(self.res, tuple(a + b for a, b in zip(self.exc, other.exc)),
                       tuple(a + b for a, b in zip(self.aff, other.aff)))

    def __sub__(self, other):
        self._check(other)
        return Divisor(self.res, tuple(a - b for a, b in zip(self.exc, other.exc)),
                       tuple(a - b for a, b in zip(self.aff, other.aff)))

    def __neg__(self):
        return Divisor(self.res, tuple(-a for a in self.exc), tuple(-a for a in self.aff))

    def scale(self, c):
        c = _frac(c)
        return Divisor(self.res, tuple(c * a for a in self.exc), tuple(c * a for a in self.aff))

    __rmul__ = scale

    def ceil(self):
        return Divisor(self.res, tuple(ceil(a) for a in self.exc), tuple(ceil(a) for a in self.aff))

    def floor(self):
        return Divisor(self.res, tuple(floor(a) for a in self.exc), tuple(floor(a) for a in self.aff))

    def positive_part(self):
        return Divisor(self.res, tuple(max(a, 0) for a in self.exc), tuple(max(a, 0) for a in self.aff))

    def exceptional_part(self):
        return Divisor(self.res, self.exc, (0,) * len(self.aff))

    def affine_part(self):
        return Divisor(self.res, (0,) * len(self.exc), self.aff)

    def is_integral(self) -> bool:
        return all(a.denominator == 1 for a in self.exc + self.aff)

    def is_zero(self) -> bool:
        return not any(self.exc) and not any(self.aff)

    def __ge__(self, other):
        self._check(other)
        return all(a >= b for a, b in zip(self.exc, other.exc)) and \
            all(a >= b for a, b in zip(self.aff, other.aff))

    def __le__(self, other):
        return other >= self

    def to_dict(self):
        return {"exc": [str(a) for a in self.exc], "aff": [str(a) for a in self.aff]}

    def __repr__(self):
        def show(v):
            return ",".join(str(a) for a in v)
        return f"Divisor(exc=({show(self.exc)}), aff=({show(self.aff)}))"


# -- intersection theory ----------------------------------------------------

@lru_cache(maxsize=64)
def _gram(prox: tuple) -> tuple:
    """``P^T P`` as a tuple of integer rows."""
    n = len(prox)
    cols = [[prox[r][c] for r in range(n)] for c in range(n)]
    out = []
    for i in range(n):
        ci = cols[i]
        row = []
        for j in range(n):
            start = max(i, j)
            row.append(sum(a * b for a, b in zip(ci[start:], cols[j][start:])))
        out.append(tuple(row))
    return tuple(out)


def intersection_matrix(res: ResolutionData) -> list[list[int]]:
    """``(E_i . E_j) = -(P^T P)_{ij}`` on the exceptional components."""
    return [[-v for v in row] for row in _gram(res.proximity)]


def affine_intersections(res: ResolutionData) -> list[list[int]]:
    """Rows: affine branches; columns: exceptional components."""
    n = res.size
    out = []
    for b in res.affine_branches:
        row = [0] * n
        row[b.attachment] = 1
        out.append(row)
    return out


def excess(D: Divisor) -> tuple:
    """The excess vector ``rho_i = -D . E_i``."""
    res = D.res
    G = _gram(res.proximity)
    rho = [sum(g * d for g, d in zip(G[i], D.exc)) for i in range(res.size)]
    for b, a in zip(res.affine_branches, D.aff):
        rho[b.attachment] -= a
    return tuple(rho)


def is_antinef(D: Divisor) -> bool:
    if not D.is_integral():
        raise ValueError("antinef test needs an integral divisor")
    return all(r >= 0 for r in excess(D))


def unload(D: Divisor) -> Divisor:
    """Antinef closure: the smallest antinef divisor above ``ceil(D)``.

    Affine coefficients are left as they are; every component with negative
    excess is raised at once by ``ceil(rho_i / E_i^2)`` until none is left.
    """
    res = D.res
    G = _gram(res.proximity)
    exc = [ceil(a) for a in D.exc]
    aff = tuple(ceil(a) for a in D.aff)
    n = res.size
    push = [0] * n
    for b, a in zip(res.affine_branches, aff):
        push[b.attachment] += a
    while True:
        rho = [sum(g * d for g, d in zip(G[i], exc)) - push[i] for i in range(n)]
        bad = [i for i in range(n) if rho[i] < 0]
        if not bad:
            return Divisor(res, tuple(exc), aff)
        for i in bad:
            exc[i] += -((rho[i]) // G[i][i])  # ceil(rho_i / E_i^2) with E_i^2 = -G_ii


def antinef_closure(D: Divisor) -> Divisor:
    return unload(D)


def _unit_lower_inverse(P) -> list[list[int]]:
    n = len(P)
    inv = [[0] * n for _ in range(n)]
    for c in range(n):
        inv[c][c] = 1
        for r in range(c + 1, n):
            inv[r][c] = -sum(P[r][k] * inv[k][c] for k in range(c, r))
    return inv


def simple_divisor(i: int, res: ResolutionData) -> Divisor:
    """Antinef divisor whose excess is the unit vector at ``i``."""
    if not 0 <= i < res.size:
        raise IndexError(f"no exceptional component {i}")
    Pinv = _unit_lower_inverse(res.proximity)
    # (P^T P)^{-1} e_i = P^{-1} P^{-T} e_i ; P^{-T} e_i is row i of P^{-1}
    w = Pinv[i]
    d = [sum(Pinv[r][k] * w[k] for k in range(res.size)) for r in range(res.size)]
    D = Divisor.of(res, d)
    if excess(D) != tuple(Fraction(int(k == i)) for k in range(res.size)):
        raise AssertionError("simple divisor has the wrong excess")
    if unload(D) != D:
        raise AssertionError("simple divisor is not its own closure")
    return D


def zariski_factorize(D: Divisor) -> list[tuple[int, int]]:
    """``[(rho_i, i)]`` with ``D_exc = sum rho_i D_i + (affine correction)``."""
    if not D.is_integral():
        raise ValueError("factorization needs an integral divisor")
    rho = excess(D)
    if any(r < 0 for r in rho):
        raise ValueError("factorization needs an antinef divisor")
    return [(int(r), i) for i, r in enumerate(rho) if r > 0]


class IdealMembership:
    """Membership test for the complete ideal ``H_D``."""

    def __init__(self, D: Divisor):
        self.divisor = D
        self.bound = D.ceil()

    def __call__(self, h) -> bool:
        if h.is_zero():
            return True
        v = valuation_vector(h, self.divisor.res)
        if any(a < b for a, b in zip(v, self.bound.exc)):
            return False
        if any(self.bound.aff):
            orders = affine_orders(h, self.divisor.res)
            if any(a < b for a, b in zip(orders, self.bound.aff) if b > 0):
                return False
        return True

    def __repr__(self):
        return f"H[{self.bound}]"


def ideal_of(D: Divisor) -> IdealMembership:
    return IdealMembership(D)
