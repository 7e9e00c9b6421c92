"""Polynomial generators of complete ideals ``H_D``.

Membership in ``H_D`` is a finite set of linear conditions on the
coefficients of a polynomial: push a generic polynomial through the blow-up
charts and ask its virtual transform at every infinitely near point ``p`` to
have order at least ``m_p``, where ``m = P D``.  Everything below is built on
those conditions.

Generators follow the factorization tree: split ``D`` into simple factors,
replace each factor by its adjacent divisor plus separating elements, and
multiply the pieces back together.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import flint

from .divisors import Divisor, excess, ideal_of, simple_divisor, unload
from .exact import BivariatePolynomial
from .exact.fields import FieldElement
from .resolution import ResolutionData, _chart_a, _chart_b, affine_orders, valuation_vector

MAX_DEPTH = 400


class GeneratorError(RuntimeError):
    """Internal failure of the generator search."""


# -- linear forms in the unknown coefficients -------------------------------

class _Form:
    """Sparse linear form ``sum coeff_k * c_k`` in the unknown coefficients."""

    __slots__ = ("d",)

    def __init__(self, d):
        self.d = d

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        out = dict(self.d)
        for k, v in other.d.items():
            w = out.get(k)
            w = v if w is None else w + v
            if w == 0:
                out.pop(k, None)
            else:
                out[k] = w
        return _Form(out)

    __radd__ = __add__

    def __mul__(self, s):
        if s == 0:
            return _Form({})
        return _Form({k: v * s for k, v in self.d.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.d
        return NotImplemented

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    __hash__ = None

    def mapped(self, emb):
        return _Form({k: emb(v) for k, v in self.d.items()})


def _rows_of(form: _Form, field, width: int):
    """Rational rows expressing ``form == 0`` over ``field``."""
    if field.is_rational:
        row = [Fraction(0)] * width
        for k, v in form.d.items():
            row[k] = v.coeffs[0] if isinstance(v, FieldElement) else v
        return [row]
    rows = [[Fraction(0)] * width for _ in range(field.degree)]
    for k, v in form.d.items():
        for t, a in enumerate(field.coordinates(v)):
            rows[t][k] = a
    return [r for r in rows if any(r)]


# -- clusters -----------------------------------------------------------------

def _core(res: ResolutionData):
    if res._engine is None:
        raise ValueError("generators need chart data; re-run the resolution from polynomials")
    return res._engine._engine, res._engine._instances


def _virtual_multiplicities(D: Divisor):
    """``m = P D`` per representative point, checked for conjugation invariance."""
    res = D.res
    if any(a.denominator != 1 for a in D.exc):
        raise ValueError("cluster of a non-integral divisor")
    core, instances = _core(res)
    P = res.proximity
    n = res.size
    m_inst = [sum(P[i][j] * D.exc[j] for j in range(i + 1)) for i in range(n)]
    m = [None] * len(core.points)
    for idx, (rep, _) in enumerate(instances):
        v = int(m_inst[idx])
        if m[rep] is None:
            m[rep] = v
        elif m[rep] != v:
            raise ValueError("divisor is not invariant under conjugation of points")
    if any(v < 0 for v in m):
        raise ValueError("divisor is not antinef (negative virtual multiplicity)")
    return m


def _truncation(core, m):
    """``T_p``: terms of degree >= T_p at p never affect the conditions."""
    children = {r: [] for r in range(len(core.points))}
    for r, pt in enumerate(core.points):
        if pt.parent is not None:
            children[pt.parent].append(r)
    T = [0] * len(core.points)
    for r in reversed(range(len(core.points))):
        below = max((T[c] for c in children[r]), default=0)
        T[r] = m[r] + below if m[r] > 0 else 0
    return T, children


def degree_bound(D: Divisor) -> int:
    """Every monomial of total degree ``>=`` this bound lies in ``H_D``."""
    if not any(D.exc):
        return 0
    core, _ = _core(D.res)
    m = _virtual_multiplicities(D)
    T, _ = _truncation(core, m)
    return T[0]


def _monomials(bound: int):
    """Monomials of degree ``< bound``, highest degree first, ``x`` before ``y``."""
    return [(a, d - a) for d in range(bound - 1, -1, -1) for a in range(d, -1, -1)]


def condition_matrix(D: Divisor, monomials) -> list[list[Fraction]]:
    """Rows ``R`` with ``sum c_k x^a_k y^b_k`` in ``H_D`` iff ``R c = 0``."""
    width = len(monomials)
    if not any(D.exc):
        return []
    core, _ = _core(D.res)
    m = _virtual_multiplicities(D)
    T, children = _truncation(core, m)
    rows = []
    local = {0: {mono: _Form({k: Fraction(1)}) for k, mono in enumerate(monomials) if sum(mono) < T[0]}}
    for r, pt in enumerate(core.points):
        if T[r] == 0:
            continue
        d = local.pop(r)
        keep = {}
        for (i, j), form in d.items():
            if i + j < m[r]:
                rows.extend(_rows_of(form, pt.field, width))
            elif i + j < T[r]:
                keep[(i, j)] = form
        for c in children[r]:
            if T[c] == 0:
                continue
            child = core.points[c]
            src = keep
            if child.embed.source is not child.embed.target:
                src = {key: f.mapped(child.embed) for key, f in keep.items()}
            if child.chart == "A":
                nd = _chart_a(src, m[r], child.c) if src else {}
            else:
                nd = _chart_b(src, m[r]) if src else {}
            local[c] = {key: f for key, f in nd.items() if key[0] + key[1] < T[c]}
    return [row for row in rows if any(row)]


def _to_fmpq(rows, width):
    if not rows:
        return flint.fmpq_mat(0, width)
    flat = []
    for row in rows:
        flat.extend(flint.fmpq(a.numerator, a.denominator) for a in row)
    return flint.fmpq_mat(len(rows), width, flat)


def _rref(M: "flint.fmpq_mat"):
    R, rank = M.rref()
    pivots = []
    col = 0
    for r in range(rank):
        while R[r, col] == 0:
            col += 1
        pivots.append(col)
        col += 1
    return R, rank, pivots


def _nullspace(rows, width):
    """Basis of ``{c : R c = 0}``; one vector per free column, in column order."""
    if not rows:
        return [[Fraction(int(i == k)) for i in range(width)] for k in range(width)]
    R, rank, pivots = _rref(_to_fmpq(rows, width))
    pivset = set(pivots)
    basis = []
    for free in range(width):
        if free in pivset:
            continue
        v = [Fraction(0)] * width
        v[free] = Fraction(1)
        for r, p in enumerate(pivots):
            a = R[r, free]
            if a != 0:
                v[p] = -Fraction(int(a.p), int(a.q))
        basis.append(v)
    return basis


def _free_column(v) -> int:
    return max(k for k, a in enumerate(v) if a != 0)


def _independent_columns(columns, height):
    """Indices of a greedy (leftmost) basis among the given column vectors."""
    if not columns or height == 0:
        return []
    flat = []
    for r in range(height):
        for col in columns:
            a = col[r]
            flat.append(flint.fmpq(a.numerator, a.denominator))
    _, _, pivots = _rref(flint.fmpq_mat(height, len(columns), flat))
    return pivots


def _apply(rows, vec):
    return [sum((a * b for a, b in zip(row, vec) if a and b), Fraction(0)) for row in rows]


def _poly_from(vec, monomials) -> BivariatePolynomial:
    return BivariatePolynomial({mono: c for mono, c in zip(monomials, vec) if c != 0}).normalized()


def _vector_of(h: BivariatePolynomial, index) -> list[Fraction]:
    v = [Fraction(0)] * len(index)
    for mono, c in h.items():
        k = index.get(mono)
        if k is not None:
            v[k] = c
    return v


# -- ideals -------------------------------------------------------------------

@dataclass(frozen=True)
class CompleteIdeal:
    generators: tuple
    divisor: Divisor

    def __contains__(self, h) -> bool:
        return ideal_of(self.divisor)(h)

    def valuation_minimum(self) -> tuple:
        vals = [valuation_vector(h, self.divisor.res) for h in self.generators]
        return tuple(min(col) for col in zip(*vals))

    def affine_minimum(self) -> tuple:
        if not self.divisor.aff:
            return ()
        vals = [affine_orders(h, self.divisor.res) for h in self.generators]
        return tuple(min(col) for col in zip(*vals))

    def realizes_divisor(self) -> bool:
        """Every generator lies in ``H_D`` and the minimum valuations equal ``D``."""
        if not self.generators:
            return False
        D = self.divisor
        if tuple(Fraction(v) for v in self.valuation_minimum()) != D.exc:
            return False
        return tuple(Fraction(v) for v in self.affine_minimum()) == D.aff

    def __str__(self):
        return "(" + ", ".join(str(g) for g in self.generators) + ")"


def maximal_ideal_divisor(res: ResolutionData) -> Divisor:
    return simple_divisor(0, res)


def adjacent_divisor(D: Divisor) -> Divisor:
    """Closure of ``D + E_O`` where ``E_O`` is the first exceptional component."""
    return unload(D + Divisor.unit(D.res, 0))


def separating_elements(D: Divisor, D2: Divisor) -> list[BivariatePolynomial]:
    """Elements of ``H_D`` forming a basis of ``H_D / H_D2`` (``D <= D2``, ``m H_D`` inside ``H_D2``)."""
    bound = max(degree_bound(D), degree_bound(D2))
    mons = _monomials(bound)
    rows_d = condition_matrix(D, mons)
    rows_d2 = condition_matrix(D2, mons)
    basis = _nullspace(rows_d, len(mons))
    # each vector's lowest-degree term is its free monomial; prefer low degree, then x
    basis.sort(key=lambda v: (sum(mons[_free_column(v)]), _free_column(v)))
    images = [_apply(rows_d2, v) for v in basis]
    chosen = _independent_columns(images, len(rows_d2))
    return [_poly_from(basis[k], mons) for k in chosen]


def separating_element(D: Divisor, D2: Divisor) -> BivariatePolynomial:
    """One element of ``H_D`` outside ``H_D2``."""
    seps = separating_elements(D, D2)
    if not seps:
        raise GeneratorError("no separating element: the ideals coincide")
    return seps[0]


def prune(gens, D: Divisor) -> list[BivariatePolynomial]:
    """Minimal generating subset of ``gens`` for ``H_D`` (exact Nakayama test).

    ``gens`` must generate ``H_D``.  A generator is kept iff it is not in
    the span of the kept ones modulo ``m H_D``.
    """
    gens = sorted(set(gens), key=lambda h: (h.order(), h.degree(), len(h), str(h)))
    if len(gens) <= 1:
        return gens
    res = D.res
    mD = D.exceptional_part() + maximal_ideal_divisor(res)
    bound = degree_bound(mD)
    mons = _monomials(bound)
    index = {mono: k for k, mono in enumerate(mons)}
    rows = condition_matrix(mD, mons)
    images = [_apply(rows, _vector_of(h, index)) for h in gens]
    keep = _independent_columns(images, len(rows))
    return [gens[k] for k in keep]


def ideal_product(A: CompleteIdeal, B: CompleteIdeal) -> CompleteIdeal:
    D = A.divisor + B.divisor
    gens = [(a * b).normalized() for a in A.generators for b in B.generators]
    return CompleteIdeal(tuple(prune(gens, D)), D)


class _Tree:
    """Memoized factorization tree on one resolution."""

    def __init__(self, res: ResolutionData):
        self.res = res
        self.memo: dict = {}
        core, instances = _core(res)
        self.orbits: dict = {}
        for idx, (rep, _) in enumerate(instances):
            self.orbits.setdefault(rep, []).append(idx)
        self.m_div = maximal_ideal_divisor(res)
        self.edges = []

    def ideal(self, D: Divisor, depth=0) -> CompleteIdeal:
        key = D.exc
        if key in self.memo:
            return self.memo[key]
        if depth > MAX_DEPTH:
            raise GeneratorError("generator tree too deep")
        if not any(D.exc):
            out = CompleteIdeal((BivariatePolynomial.constant(1),), D)
        else:
            rho = excess(D)
            nodes = []
            for rep, members in self.orbits.items():
                vals = {rho[i] for i in members}
                if len(vals) != 1:
                    raise ValueError("divisor is not invariant under conjugation of points")
                r = vals.pop()
                if r > 0:
                    node = Divisor.zero(self.res)
                    for i in members:
                        node = node + simple_divisor(i, self.res)
                    nodes.append((node, int(r)))
            out = None
            for node, mult in nodes:
                piece = self.node_ideal(node, depth + 1)
                for _ in range(mult):
                    out = piece if out is None else ideal_product(out, piece)
            out = CompleteIdeal(out.generators, D)
        self.memo[key] = out
        return out

    def node_ideal(self, node: Divisor, depth) -> CompleteIdeal:
        if node.exc in self.memo:
            return self.memo[node.exc]
        if node == self.m_div:
            out = CompleteIdeal((BivariatePolynomial.x(), BivariatePolynomial.y()), node)
        else:
            adj = adjacent_divisor(node)
            seps = separating_elements(node, adj)
            if not seps:
                raise GeneratorError("adjacent divisor defines the same ideal")
            self.edges.append((node.exc, adj.exc, tuple(seps)))
            lower = self.ideal(adj, depth + 1)
            out = CompleteIdeal(tuple(prune(list(lower.generators) + seps, node)), node)
        self.memo[node.exc] = out
        return out


_TREES: dict = {}


def _tree_for(res: ResolutionData) -> _Tree:
    entry = _TREES.get(id(res))
    if entry is None or entry.res is not res:
        if len(_TREES) > 16:
            _TREES.clear()
        entry = _TREES[id(res)] = _Tree(res)
    return entry


def principal_split(D: Divisor):
    """``(h, D_rest)`` with ``H_D = h * H_{D_rest}`` and ``D_rest`` exceptional."""
    res = D.res
    D = D.ceil()
    core_polys = res._engine.factor_polys if res._engine is not None else None
    power = {}
    for b, a in zip(res.affine_branches, D.aff):
        if a > 0:
            power[b.factor] = max(power.get(b.factor, 0), int(a))
    h = BivariatePolynomial.constant(1)
    rest = D.exceptional_part()
    for idx in sorted(power):
        if core_polys is None:
            raise ValueError("generators need chart data; re-run the resolution from polynomials")
        phi = core_polys[idx]
        h = h * phi ** power[idx]
        rest = rest - Divisor.of(res, valuation_vector(phi, res)).scale(power[idx])
    return h, unload(rest.positive_part())


def generators(D: Divisor) -> CompleteIdeal:
    """Generators of ``H_D`` for an antinef divisor ``D`` (affine part allowed)."""
    h, rest = principal_split(D)
    tree = _tree_for(D.res)
    core = tree.ideal(rest)
    gens = tuple((h * g).normalized() for g in core.generators)
    return CompleteIdeal(gens, unload(D))


def generators_by_linear_algebra(D: Divisor) -> CompleteIdeal:
    """Independent route: null space of the conditions plus all boundary monomials."""
    h, rest = principal_split(D)
    bound = degree_bound(rest)
    if bound == 0:
        return CompleteIdeal(((h).normalized(),), unload(D))
    mons = _monomials(bound + 1)
    rows = condition_matrix(rest, mons)
    basis = _nullspace(rows, len(mons))
    gens = [_poly_from(v, mons) for v in basis]
    return CompleteIdeal(tuple((h * g).normalized() for g in prune(gens, rest)), unload(D))
