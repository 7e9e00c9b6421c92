"""Multiplier ideals ``J((f/g)^lambda)`` and their jumping numbers."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil
from typing import Iterator

from .divisors import Divisor, unload
from .exact import BivariatePolynomial
from .resolution import ResolutionData, affine_orders, valuation_vector


class NoZeroPartError(ValueError):
    """``f/g`` has no zero divisor part: nothing jumps."""


@dataclass(frozen=True)
class JumpRecord:
    lam: Fraction
    divisor: Divisor
    generators: tuple | None = None

    def with_generators(self, gens) -> "JumpRecord":
        return JumpRecord(self.lam, self.divisor, tuple(gens))


def _rational(lam) -> Fraction:
    lam = Fraction(lam)
    if lam < 0:
        raise ValueError(f"exponent must be nonnegative, got {lam}")
    return lam


def principal_divisor(res: ResolutionData, which: str) -> Divisor:
    """Total transform ``pi^* f`` (``which='f'``) or ``pi^* g``."""
    if which == "f":
        return Divisor.of(res, res.values_f, [b.n_f for b in res.affine_branches])
    if which == "g":
        return Divisor.of(res, res.values_g, [b.n_g for b in res.affine_branches])
    raise ValueError("which must be 'f' or 'g'")


def divisor_of(h: BivariatePolynomial, res: ResolutionData) -> Divisor:
    """``div(pi^* h)`` on the exceptional components and affine branches."""
    if h.is_zero():
        raise ValueError("divisor of the zero polynomial")
    return Divisor.of(res, valuation_vector(h, res), affine_orders(h, res))


def zero_part(res: ResolutionData) -> Divisor:
    """Positive part of ``pi^* f - pi^* g``."""
    return Divisor.of(res, [max(v, 0) for v in res.values], [max(b.n, 0) for b in res.affine_branches])


def canonical_divisor(res: ResolutionData) -> Divisor:
    return Divisor.of(res, res.canonical)


def multiplier_divisor(res: ResolutionData, lam) -> Divisor:
    """Antinef divisor of ``J((f/g)^lam)``: closure of ``floor(lam*F0 - K)``."""
    lam = _rational(lam)
    return unload((zero_part(res).scale(lam) - canonical_divisor(res)).floor())


def infinity_multiplier_divisor(res: ResolutionData, lam) -> Divisor:
    """Antinef divisor of ``J((g/f)^lam)``."""
    swapped = res.swapped()
    D = multiplier_divisor(swapped, lam)
    return Divisor(res, D.exc, D.aff)


def mixed_multiplier_divisor(res: ResolutionData, lam1, lam2) -> Divisor:
    """Antinef divisor of ``J(f^lam1 g^lam2)``."""
    lam1, lam2 = _rational(lam1), _rational(lam2)
    D = principal_divisor(res, "f").scale(lam1) + principal_divisor(res, "g").scale(lam2)
    return unload((D - canonical_divisor(res)).floor())


def colon_with_principal(D: Divisor, h, ell: int) -> Divisor:
    """Divisor of ``H_D : (h^ell)``; ``h`` is a polynomial or its divisor."""
    if ell < 1:
        raise ValueError("ell must be a positive integer")
    if isinstance(h, BivariatePolynomial):
        h = divisor_of(h, D.res)
    return unload((D - h.scale(ell)).positive_part())


def _candidates(res: ResolutionData):
    """``(N_i, k_i, index)`` over components of ``F0``; affine ones have ``k = 0``."""
    exc = [(N, k, ("e", i)) for i, (N, k) in enumerate(zip(res.values, res.canonical)) if N > 0]
    aff = [(b.n, 0, ("a", j)) for j, b in enumerate(res.affine_branches) if b.n > 0]
    return exc + aff


def next_jumping_number(res: ResolutionData, D: Divisor) -> Fraction:
    """Smallest ``lam`` beyond the ideal of ``D``: ``min (k_i + 1 + e_i) / N_i``."""
    cands = _candidates(res)
    if not cands:
        raise NoZeroPartError("f/g has an empty zero divisor part; no jumping numbers")
    best = None
    for N, k, (kind, i) in cands:
        e = D.exc[i] if kind == "e" else D.aff[i]
        lam = Fraction(k + 1 + e, N)
        if best is None or lam < best:
            best = lam
    return best


def jumping_numbers(res: ResolutionData, lam_max) -> Iterator[JumpRecord]:
    """All jumping numbers ``<= lam_max`` in increasing order, with divisors."""
    lam_max = Fraction(lam_max)
    if lam_max <= 0:
        raise ValueError("lam_max must be positive")
    D = Divisor.zero(res)
    while True:
        lam = next_jumping_number(res, D)
        if lam > lam_max:
            return
        D = multiplier_divisor(res, lam)
        yield JumpRecord(lam, D)


def jumping_number_list(res: ResolutionData, lam_max) -> list[Fraction]:
    return [r.lam for r in jumping_numbers(res, lam_max)]


# -- the integer tail ---------------------------------------------------------

def hypothesis_violations(res: ResolutionData) -> list[str]:
    """Reasons the integer-tail guarantee does not apply (empty if it does)."""
    out = []
    if res.factors:
        if any(mf > 1 or mg > 1 for _, mf, mg in res.factors):
            out.append("f or g is not reduced")
        if any(mf and mg for _, mf, mg in res.factors):
            out.append("f and g are not coprime")
        if not any(mf for _, mf, _ in res.factors):
            out.append("f does not vanish at the origin")
        if not any(mg for _, _, mg in res.factors):
            out.append("g does not vanish at the origin")
    else:
        if any(b.n_f > 1 or b.n_g > 1 for b in res.affine_branches):
            out.append("f or g is not reduced")
        if any(b.owner == "fg" for b in res.affine_branches):
            out.append("f and g are not coprime")
        if min(res.values_f) == 0:
            out.append("f does not vanish at the origin")
        if min(res.values_g) == 0:
            out.append("g does not vanish at the origin")
    return out


class Threshold(int):
    """Integer threshold carrying whether the integer-tail guarantee applies."""

    guaranteed: bool
    reasons: tuple

    def __new__(cls, value, guaranteed, reasons=()):
        obj = super().__new__(cls, value)
        obj.guaranteed = guaranteed
        obj.reasons = tuple(reasons)
        return obj


def integer_tail_threshold(res: ResolutionData) -> Threshold:
    """Least ``n >= 0`` with ``N_f,i <= (n+1) N_g,i + k_i + 1`` wherever ``N_i > 0``.

    Past ``n`` every jumping number is an integer, provided ``f`` and ``g``
    are reduced, coprime and both vanish at the origin.
    """
    n = 0
    for i, N in enumerate(res.values):
        if N <= 0:
            continue
        nf, ng, k = res.values_f[i], res.values_g[i], res.canonical[i]
        if nf <= ng + k + 1:
            continue
        if ng == 0:
            raise ValueError(f"no integer tail: component {i} has N_g = 0 and N_f > k + 1")
        n = max(n, ceil(Fraction(nf - k - 1, ng)) - 1)
    reasons = hypothesis_violations(res)
    return Threshold(n, not reasons, reasons)


def is_integer_only(res: ResolutionData) -> bool:
    """True when ``N_f,i <= N_g,i + k_i + 1`` on every component."""
    return all(nf <= ng + k + 1 for nf, ng, k in zip(res.values_f, res.values_g, res.canonical))


# -- executable identities ----------------------------------------------------

@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str = ""
    data: dict = field(default_factory=dict)
    skipped: bool = False

    @property
    def status(self) -> str:
        return "skipped" if self.skipped else ("pass" if self.ok else "FAIL")


def check_skoda(res: ResolutionData, lam, ell: int) -> CheckResult:
    """``D(lam + ell) = ell * pi^*f + (D(lam) : g^ell)``."""
    lam = Fraction(lam)
    lhs = multiplier_divisor(res, lam + ell)
    rhs = principal_divisor(res, "f").scale(ell) + colon_with_principal(
        multiplier_divisor(res, lam), principal_divisor(res, "g"), ell)
    return CheckResult(f"skoda lam={lam} ell={ell}", lhs == rhs, "" if lhs == rhs else f"{lhs} != {rhs}")


def check_colon_formula(res: ResolutionData, lam) -> CheckResult:
    """``D(lam) = D(f^lam g^(t-lam)) : g^t`` with ``t = ceil(lam)``."""
    lam = Fraction(lam)
    t = max(ceil(lam), 1)
    lhs = multiplier_divisor(res, lam)
    rhs = colon_with_principal(mixed_multiplier_divisor(res, lam, t - lam), principal_divisor(res, "g"), t)
    return CheckResult(f"colon lam={lam} t={t}", lhs == rhs, "" if lhs == rhs else f"{lhs} != {rhs}")


def check_integer_power(res: ResolutionData, n: int) -> CheckResult:
    """``D(n) = n * pi^* f`` for a positive integer ``n``."""
    lhs = multiplier_divisor(res, n)
    rhs = principal_divisor(res, "f").scale(n)
    return CheckResult(f"integer power n={n}", lhs == rhs, "" if lhs == rhs else f"{lhs} != {rhs}")


def check_classical_domination(res: ResolutionData, lam) -> CheckResult:
    """``J(f^lam)`` is inside ``J((f/g)^lam)``."""
    ok = multiplier_divisor(res, lam) <= mixed_multiplier_divisor(res, lam, 0)
    return CheckResult(f"J(f^lam) inside J((f/g)^lam) lam={Fraction(lam)}", ok)


def check_integers_jump(res: ResolutionData, upto: int) -> CheckResult:
    found = set(jumping_number_list(res, upto))
    missing = [n for n in range(1, upto + 1) if Fraction(n) not in found]
    return CheckResult(f"integers 1..{upto} jump", not missing, f"missing {missing}" if missing else "")


def check_tail(res: ResolutionData, lam_max) -> CheckResult:
    """No non-integer jumping number lies beyond the integer-tail threshold."""
    n = integer_tail_threshold(res)
    late = [lam for lam in jumping_number_list(res, lam_max) if lam > n and lam.denominator != 1]
    return CheckResult(f"integer tail beyond {int(n)}", not late, f"non-integers {late}" if late else "",
                       {"threshold": int(n), "guaranteed": n.guaranteed})


def check_integer_only(res: ResolutionData, upto: int = 2) -> CheckResult:
    flag = is_integer_only(res)
    fractional = [lam for lam in jumping_number_list(res, upto) if lam.denominator != 1]
    ok = flag == (not fractional)
    return CheckResult("integer-only criterion", ok, f"criterion {flag}, fractional {fractional[:5]}")


def verify(res: ResolutionData, lam_max=2) -> list[CheckResult]:
    """Run every identity that applies to ``res`` on its jumping numbers ``<= 1``."""
    lam_max = Fraction(lam_max)
    out = []
    sample = [r.lam for r in jumping_numbers(res, min(lam_max, 1))]
    for lam in sample:
        for ell in (1, 2):
            out.append(check_skoda(res, lam, ell))
        out.append(check_colon_formula(res, lam))
        out.append(check_classical_domination(res, lam))
    reasons = hypothesis_violations(res)
    if not reasons:
        for n in (1, 2, 3):
            out.append(check_integer_power(res, n))
        out.append(check_integers_jump(res, 3))
        out.append(check_tail(res, max(lam_max, integer_tail_threshold(res) + 1)))
        out.append(check_integer_only(res))
    else:
        why = "hypothesis not met, skipped: " + "; ".join(reasons)
        for name in ("integer powers", "integers jump", "integer tail", "integer-only criterion"):
            out.append(CheckResult(name, True, why, skipped=True))
    return out
