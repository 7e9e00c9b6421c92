"""Minimal log resolution of a meromorphic germ ``f/g`` at the origin.

The resolution is built by explicit point blow-ups.  Every infinitely near
point carries local coordinates ``(u, v)`` in which the exceptional curves
through it are coordinate axes, and the strict transforms of the irreducible
factors of ``f*g`` are tracked as polynomials in those coordinates.

Conjugate points (irrational points on an exceptional curve) are processed
once over an algebraic extension; the finished data is expanded so every
infinitely near point has its own exceptional component.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import comb

import numpy as np

from .exact import univariate as up
from .exact.bivariate import BivariatePolynomial, factor_rational
from .exact.fields import RATIONALS, NumberField, adjoin_root, factor, identity

FORMAT_TAG = "merojump.resolution/1"


class TrivialGermError(ValueError):
    """Both ``f`` and ``g`` are units at the origin."""


# -- local polynomial kernels (dicts {(i, j): coeff}) ---------------------

def _mult(d) -> int:
    return min(i + j for i, j in d) if d else 10**9


def _chart_a(d, m, c):
    """``u = u1, v = u1*(v1 + c)``, then divide by ``u1^m``."""
    out = {}
    if c == 0:
        for (i, j), a in d.items():
            key = (i + j - m, j)
            out[key] = out.get(key, 0) + a
    else:
        cpow = [1]
        top = max(j for _, j in d)
        for _ in range(top):
            cpow.append(cpow[-1] * c)
        for (i, j), a in d.items():
            s = i + j - m
            for k in range(j + 1):
                key = (s, k)
                out[key] = out.get(key, 0) + a * (comb(j, k) * cpow[j - k])
    return {k: v for k, v in out.items() if v != 0}


def _chart_b(d, m):
    """``u = u1*v1, v = v1``, then divide by ``v1^m``."""
    return {(i, i + j - m): a for (i, j), a in d.items()}


def _embed(d, emb):
    if emb.source is emb.target:
        return d
    return {k: emb(v) for k, v in d.items()}


def _transform(d, m, chart, c, emb):
    d = _embed(d, emb)
    if chart == "A":
        return _chart_a(d, m, c)
    return _chart_b(d, m)


def _tangent_poly(d, m):
    """``T(1, t)`` for the degree-``m`` form ``T(u, v)`` of ``d``."""
    coeffs = [0] * (m + 1)
    for (i, j), a in d.items():
        if i + j == m:
            coeffs[j] = a
    return coeffs


@dataclass
class _Point:
    parent: int | None          # component whose blow-up created this point
    chart: str                  # "origin", "A" or "B"
    c: object                   # translation in chart A
    field: NumberField
    embed: object               # parent field -> field
    axes: tuple                 # (component on u=0, component on v=0)
    copies: int                 # number of conjugate points represented
    local_degree: int           # conjugates per point of the parent component

    def proximate(self):
        return [a for a in self.axes if a is not None]


@dataclass
class _Leaf:
    point: _Point
    factor: int
    poly: dict


@dataclass(frozen=True)
class AffineBranch:
    """An analytic branch of ``f*g`` through the origin (strict transform)."""

    owner: str          # "f", "g" or "fg" (common factor)
    factor: int         # index into ResolutionData.factors (-1 if unknown)
    attachment: int     # exceptional component met by the strict transform
    class_size: int
    n_f: int
    n_g: int

    @property
    def n(self) -> int:
        return self.n_f - self.n_g


@dataclass(frozen=True)
class ChartRecord:
    """Blow-up chart that leads from a component to the point of another."""

    parent: int | None
    chart: str
    translation: str
    field: str
    class_size: int


@dataclass(frozen=True)
class ResolutionData:
    """Combinatorial shadow of the minimal log resolution of ``f/g``."""

    proximity: tuple
    canonical: tuple
    values_f: tuple
    values_g: tuple
    affine_branches: tuple
    dicritical: tuple
    factors: tuple = ()          # (polynomial text, mult in f, mult in g)
    f: str | None = None
    g: str | None = None
    chart_log: tuple = ()
    _engine: object = field(default=None, repr=False, compare=False)

    @property
    def size(self) -> int:
        return len(self.proximity)

    @property
    def values(self) -> tuple:
        return tuple(a - b for a, b in zip(self.values_f, self.values_g))

    @property
    def reduced_coprime(self) -> bool:
        """f and g reduced, coprime, and both vanishing at the origin."""
        if not self.factors:
            owners = {b.owner for b in self.affine_branches}
            return "fg" not in owners and all(b.n_f <= 1 and b.n_g <= 1 for b in self.affine_branches) \
                and bool(self.values_g) and min(self.values_g) > 0 and min(self.values_f) > 0
        ok = all(mf * mg == 0 and mf <= 1 and mg <= 1 for _, mf, mg in self.factors)
        return ok and min(self.values_f) > 0 and min(self.values_g) > 0

    @property
    def coprime(self) -> bool:
        return all(b.owner != "fg" for b in self.affine_branches) if not self.factors else \
            all(mf * mg == 0 for _, mf, mg in self.factors)

    @property
    def has_charts(self) -> bool:
        return self._engine is not None

    def proximity_matrix(self) -> np.ndarray:
        return np.array(self.proximity, dtype=np.int64)

    def proximate_to(self, i: int) -> list[int]:
        return [j for j in range(i) if self.proximity[i][j] == -1]

    def swapped(self) -> "ResolutionData":
        """The same resolution read as ``g/f``."""
        swap_owner = {"f": "g", "g": "f", "fg": "fg"}
        branches = tuple(
            AffineBranch(swap_owner[b.owner], b.factor, b.attachment, b.class_size, b.n_g, b.n_f)
            for b in self.affine_branches
        )
        return ResolutionData(
            self.proximity, self.canonical, self.values_g, self.values_f, branches,
            self.dicritical, tuple((p, mg, mf) for p, mf, mg in self.factors),
            self.g, self.f, self.chart_log, self._engine,
        )

    # -- structured export/import ----------------------------------------
    def to_dict(self) -> dict:
        return {
            "format": FORMAT_TAG,
            "f": self.f,
            "g": self.g,
            "proximity": [list(r) for r in self.proximity],
            "canonical": list(self.canonical),
            "values_f": list(self.values_f),
            "values_g": list(self.values_g),
            "values": list(self.values),
            "dicritical": list(self.dicritical),
            "affine_branches": [
                {"owner": b.owner, "factor": b.factor, "attachment": b.attachment,
                 "class_size": b.class_size, "n_f": b.n_f, "n_g": b.n_g}
                for b in self.affine_branches
            ],
            "factors": [{"polynomial": p, "mult_f": mf, "mult_g": mg} for p, mf, mg in self.factors],
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    @classmethod
    def from_dict(cls, data: dict) -> "ResolutionData":
        if data.get("format", FORMAT_TAG) != FORMAT_TAG:
            raise ValueError(f"unknown resolution format {data.get('format')!r}")
        prox = tuple(tuple(int(v) for v in row) for row in data["proximity"])
        res = cls(
            proximity=prox,
            canonical=tuple(int(v) for v in data["canonical"]),
            values_f=tuple(int(v) for v in data["values_f"]),
            values_g=tuple(int(v) for v in data["values_g"]),
            affine_branches=tuple(
                AffineBranch(b["owner"], int(b.get("factor", -1)), int(b["attachment"]),
                             int(b.get("class_size", 1)), int(b["n_f"]), int(b["n_g"]))
                for b in data.get("affine_branches", [])
            ),
            dicritical=tuple(bool(v) for v in data["dicritical"]),
            factors=tuple((d["polynomial"], int(d["mult_f"]), int(d["mult_g"]))
                          for d in data.get("factors", [])),
            f=data.get("f"),
            g=data.get("g"),
        )
        validate(res)
        return res

    @classmethod
    def from_json(cls, text: str) -> "ResolutionData":
        return cls.from_dict(json.loads(text))


def validate(res: ResolutionData) -> None:
    """Check the structural invariants of a resolution; raise ValueError."""
    n = res.size
    P = res.proximity
    for name, vec in (("canonical", res.canonical), ("values_f", res.values_f),
                      ("values_g", res.values_g), ("dicritical", res.dicritical)):
        if len(vec) != n:
            raise ValueError(f"{name} has length {len(vec)}, expected {n}")
    for i in range(n):
        if len(P[i]) != n or P[i][i] != 1:
            raise ValueError("proximity matrix must be square with unit diagonal")
        if any(P[i][j] != 0 for j in range(i + 1, n)):
            raise ValueError("proximity matrix must be lower triangular")
        prox = [j for j in range(i) if P[i][j] == -1]
        if any(P[i][j] not in (0, -1) for j in range(i)):
            raise ValueError("off-diagonal proximity entries must be 0 or -1")
        if i > 0 and not 1 <= len(prox) <= 2:
            raise ValueError(f"point {i} must be proximate to one or two points")
        if len(prox) == 2:
            a, b = prox
            if P[b][a] != -1 and P[a][b] != -1:
                # satellite: the two proximate points must be proximate to each other
                raise ValueError(f"point {i} is proximate to non-adjacent points {a}, {b}")
        if res.canonical[i] != 1 + sum(res.canonical[j] for j in prox):
            raise ValueError("canonical values do not satisfy k = P^-1 * 1")
    for b in res.affine_branches:
        if not 0 <= b.attachment < n:
            raise ValueError("affine branch attached to a missing component")


# -- the resolution engine --------------------------------------------------

class _Engine:
    """Builds the resolution and keeps the chart data for valuations."""

    def __init__(self, factors):
        self.factors = factors            # list of (poly, mult_f, mult_g)
        self.points: list[_Point] = []    # one per representative component
        self.vals: list[list[int]] = []   # per component, value of each factor
        self.kvals: list[int] = []
        self.edges: set = set()
        self.leaves: list[_Leaf] = []

    # value helpers
    def _pair(self, comp):
        """Values of (a1, a2) at a representative component."""
        a1 = a2 = 0
        for idx, (_, mf, mg) in enumerate(self.factors):
            b = min(mf, mg)
            a1 += (mf - b) * self.vals[comp][idx]
            a2 += (mg - b) * self.vals[comp][idx]
        return a1, a2

    def _d(self, comp):
        a1, a2 = self._pair(comp)
        return a1 - a2

    def _new_component(self, point: _Point, mults: dict) -> int:
        prox = point.proximate()
        comp = len(self.points)
        self.points.append(point)
        self.vals.append([mults.get(i, 0) + sum(self.vals[a][i] for a in prox)
                          for i in range(len(self.factors))])
        self.kvals.append(1 + sum(self.kvals[a] for a in prox))
        A, B = point.axes
        if A is not None and B is not None:
            self.edges.discard((min(A, B), max(A, B)))
        for a in prox:
            self.edges.add((a, comp))
        return comp

    def _children(self, comp: int, point: _Point, S: dict, mults: dict):
        """Points on the new component ``comp`` through which a strict transform passes."""
        K = point.field
        A, B = point.axes
        prod = [K.coerce(1)]
        infinity = False
        for idx, d in S.items():
            m = mults[idx]
            if m == 0:
                continue
            t = _tangent_poly(d, m)
            prod = up.mul(prod, up.trim(t))
            if t[m] == 0:
                infinity = True
        out = []
        for psi, _ in factor(K, prod):
            L, emb, c = adjoin_root(K, psi)
            deg = len(psi) - 1
            axes = (comp, B if c == 0 else None)
            child = _Point(comp, "A", c, L, emb, axes, point.copies * deg, deg)
            sub = {}
            for idx, d in S.items():
                if mults[idx] == 0:
                    continue
                nd = _transform(d, mults[idx], "A", c, emb)
                if (0, 0) not in nd:
                    sub[idx] = nd
            out.append((child, sub))
        if infinity:
            child = _Point(comp, "B", None, K, identity(K), (A, comp), point.copies, 1)
            sub = {}
            for idx, d in S.items():
                if mults[idx] == 0:
                    continue
                nd = _transform(d, mults[idx], "B", None, child.embed)
                if (0, 0) not in nd:
                    sub[idx] = nd
            out.append((child, sub))
        return out

    def _needs_blowup(self, point: _Point, S: dict, mults: dict) -> bool:
        total = sum(mults.values())
        if point.chart == "origin":
            return total > 0
        if total >= 2:
            return True
        if total == 0:
            return False
        e = sum(a is not None for a in point.axes)
        if e >= 2:
            return True
        (idx,) = [i for i, m in mults.items() if m == 1]
        t = _tangent_poly(S[idx], 1)      # alpha*u + beta*v -> [alpha, beta]
        alpha, beta = t[0], t[1]
        A, B = point.axes
        if A is not None and beta == 0:
            return True
        if B is not None and alpha == 0:
            return True
        return False

    def resolve_curve(self, origin_polys: dict):
        """Phase 1: minimal log resolution of the reduced curve, origin always blown up."""
        origin = _Point(None, "origin", None, RATIONALS, identity(RATIONALS), (None, None), 1, 1)
        stack = [(origin, origin_polys)]
        while stack:
            point, S = stack.pop()
            mults = {i: _mult(d) for i, d in S.items()}
            if not self._needs_blowup(point, S, mults):
                (idx,) = [i for i, m in mults.items() if m == 1]
                self.leaves.append(_Leaf(point, idx, S[idx]))
                continue
            comp = self._new_component(point, mults)
            children = self._children(comp, point, S, mults)
            for child in reversed(children):
                stack.append(child)

    def separate_pencil(self):
        """Phase 2: free blow-ups along the branches of a1 and a2.

        Each branch of a_k sitting on a component where v(a1) != v(a2) is
        blown up once, then again while v(a_k) < v(a_other).  Nothing happens
        when a1 or a2 is a unit (the holomorphic case).
        """
        has_a1 = any(mf > min(mf, mg) for _, mf, mg in self.factors)
        has_a2 = any(mg > min(mf, mg) for _, mf, mg in self.factors)
        if not (has_a1 and has_a2):
            return
        done = []
        queue = [(leaf, True) for leaf in self.leaves]
        while queue:
            leaf, first = queue.pop(0)
            _, mf, mg = self.factors[leaf.factor]
            b = min(mf, mg)
            in_a1, in_a2 = mf - b > 0, mg - b > 0
            comp = next(a for a in leaf.point.axes if a is not None)
            d = self._d(comp)
            if first:
                go = (in_a1 or in_a2) and d != 0
            else:
                go = (in_a1 and d < 0) or (in_a2 and d > 0)
            if not go:
                done.append(leaf)
                continue
            S = {leaf.factor: leaf.poly}
            mults = {leaf.factor: 1}
            new = self._new_component(leaf.point, mults)
            (child, sub), = self._children(new, leaf.point, S, mults)
            queue.insert(0, (_Leaf(child, leaf.factor, sub[leaf.factor]), False))
        self.leaves = done

    def separate_satellites(self):
        """Phase 3: blow up E_i ∩ E_j while the order of a1/a2 has opposite signs."""
        while True:
            bad = sorted((i, j) for i, j in self.edges if self._d(i) * self._d(j) < 0)
            if not bad:
                return
            i, j = bad[0]
            pj = self.points[j]
            A, B = pj.axes
            # the edge point lies on E_j in the direction of the axis E_i at p_j
            if j == i:
                raise AssertionError("self edge")
            if self._owner_axis(j, i) == "u":
                point = _Point(j, "B", None, pj.field, identity(pj.field), (i, j), pj.copies, 1)
            else:
                point = _Point(j, "A", pj.field.coerce(0), pj.field, identity(pj.field), (j, i), pj.copies, 1)
            self._new_component(point, {})

    def _owner_axis(self, j, i):
        A, B = self.points[j].axes
        if A == i:
            return "u"
        if B == i:
            return "v"
        raise AssertionError(f"components {i} and {j} do not meet")

    # -- valuations ------------------------------------------------------
    def strict_multiplicities(self, h: dict) -> list[int]:
        """Multiplicity of the strict transform of ``h`` at each representative point."""
        strict = []
        mults = []
        for comp, point in enumerate(self.points):
            if point.parent is None:
                d = dict(h)
            else:
                pd = strict[point.parent]
                d = _transform(pd, mults[point.parent], point.chart, point.c, point.embed) if pd else {}
            m = _mult(d) if d else 0
            strict.append(d)
            mults.append(m)
        return mults

    def rep_values(self, mults: list[int]) -> list[int]:
        vals = []
        for comp, point in enumerate(self.points):
            vals.append(mults[comp] + sum(vals[a] for a in point.proximate()))
        return vals


def _expand(engine: _Engine):
    """Expand representatives into one entry per infinitely near point.

    Returns ``(instances, leaf_instances)`` where an instance is
    ``(rep, parent_instance)``.
    """
    instances = []
    by_rep = {}
    for rep, point in enumerate(engine.points):
        if point.parent is None:
            parents = [None]
        else:
            parents = by_rep[point.parent]
        mine = []
        for par in parents:
            for _ in range(point.local_degree):
                mine.append(len(instances))
                instances.append((rep, par))
        by_rep[rep] = mine
    leaf_instances = []
    for leaf in engine.leaves:
        for par in by_rep[leaf.point.parent]:
            for _ in range(leaf.point.local_degree):
                leaf_instances.append((leaf, par))
    return instances, by_rep, leaf_instances


def _ancestor_instance(instances, inst, rep):
    while inst is not None:
        if instances[inst][0] == rep:
            return inst
        inst = instances[inst][1]
    raise AssertionError("proximate component is not an ancestor")


class ResolutionEngine:
    """Chart data behind a :class:`ResolutionData`; computes valuations."""

    def __init__(self, engine: _Engine, instances, factor_polys):
        self._engine = engine
        self._instances = instances
        self.factor_polys = factor_polys

    def valuation_vector(self, h: BivariatePolynomial) -> list[int]:
        if h.is_zero():
            raise ValueError("valuation of zero")
        mults = self._engine.strict_multiplicities(dict(h.items()))
        vals = self._engine.rep_values(mults)
        return [vals[rep] for rep, _ in self._instances]

    def multiplicity_vector(self, h: BivariatePolynomial) -> list[int]:
        mults = self._engine.strict_multiplicities(dict(h.items()))
        return [mults[rep] for rep, _ in self._instances]


def log_resolution(f: BivariatePolynomial, g: BivariatePolynomial) -> ResolutionData:
    """Minimal log resolution of the meromorphic germ ``f/g`` at the origin."""
    if f.is_zero() or g.is_zero():
        raise ValueError("f and g must be nonzero")
    if f.value_at_origin() != 0 and g.value_at_origin() != 0:
        raise TrivialGermError("f and g are both units at the origin: trivial germ")
    facs = {}
    for poly, mult in (factor_rational(f) if f.degree() > 0 else []):
        facs.setdefault(poly, [0, 0])[0] += mult
    for poly, mult in (factor_rational(g) if g.degree() > 0 else []):
        facs.setdefault(poly, [0, 0])[1] += mult
    factors = [(p, mf, mg) for p, (mf, mg) in facs.items() if p.value_at_origin() == 0]
    factors.sort(key=lambda t: (t[0].degree(), str(t[0])))
    engine = _Engine(factors)
    engine.resolve_curve({i: dict(p.items()) for i, (p, _, _) in enumerate(factors)})
    engine.separate_pencil()
    engine.separate_satellites()

    instances, by_rep, leaf_instances = _expand(engine)
    n = len(instances)
    prox = [[0] * n for _ in range(n)]
    for idx, (rep, par) in enumerate(instances):
        prox[idx][idx] = 1
        for a in engine.points[rep].proximate():
            prox[idx][_ancestor_instance(instances, par, a)] = -1

    nf = [sum(mf * engine.vals[rep][i] for i, (_, mf, _) in enumerate(factors)) for rep, _ in instances]
    ng = [sum(mg * engine.vals[rep][i] for i, (_, _, mg) in enumerate(factors)) for rep, _ in instances]
    k = [engine.kvals[rep] for rep, _ in instances]

    branches = []
    attached = set()
    for leaf, par in leaf_instances:
        _, mf, mg = factors[leaf.factor]
        owner = "fg" if mf and mg else ("f" if mf else "g")
        comp = next(a for a in leaf.point.axes if a is not None)
        att = _ancestor_instance(instances, par, comp)
        attached.add((att, owner))
        branches.append(AffineBranch(owner, leaf.factor, att, leaf.point.copies, mf, mg))
    branches.sort(key=lambda b: (b.attachment, b.factor))

    # dicritical: N_i = 0 and a1/a2 is non-constant on E_i
    nvals = [a - b for a, b in zip(nf, ng)]
    neighbours = {i: set() for i in range(n)}
    for i in range(n):
        for j in range(i):
            if prox[i][j] == -1:
                neighbours[i].add(j)
                neighbours[j].add(i)
    # strict-transform adjacency: i meets j iff proximate and no later point proximate to both
    for i in range(n):
        for j in list(neighbours[i]):
            lo, hi = min(i, j), max(i, j)
            if any(prox[q][lo] == -1 and prox[q][hi] == -1 for q in range(hi + 1, n)):
                neighbours[i].discard(j)
    dicritical = []
    for i in range(n):
        if nvals[i] != 0:
            dicritical.append(False)
            continue
        pencil_branch = any(b.attachment == i and b.owner in ("f", "g") for b in branches)
        dicritical.append(pencil_branch or any(nvals[j] != 0 for j in neighbours[i]))

    chart_log = tuple(
        ChartRecord(
            None if par is None else par,
            engine.points[rep].chart,
            "" if engine.points[rep].c is None else str(engine.points[rep].c),
            engine.points[rep].field.name,
            engine.points[rep].local_degree,
        )
        for rep, par in instances
    )
    eng = ResolutionEngine(engine, instances, [p for p, _, _ in factors])
    res = ResolutionData(
        proximity=tuple(tuple(r) for r in prox),
        canonical=tuple(k),
        values_f=tuple(nf),
        values_g=tuple(ng),
        affine_branches=tuple(branches),
        dicritical=tuple(dicritical),
        factors=tuple((str(p), mf, mg) for p, mf, mg in factors),
        f=str(f),
        g=str(g),
        chart_log=chart_log,
        _engine=eng,
    )
    validate(res)
    return res


def valuation_vector(h: BivariatePolynomial, res: ResolutionData) -> list[int]:
    """Values ``v_i(h)`` at every exceptional component (needs chart data)."""
    if res._engine is None:
        raise ValueError("resolution was imported without chart data; valuations unavailable")
    return res._engine.valuation_vector(h)


def affine_orders(h: BivariatePolynomial, res: ResolutionData) -> list[int]:
    """Vanishing order of ``h`` along each affine branch."""
    if res._engine is None:
        raise ValueError("resolution was imported without chart data; valuations unavailable")
    polys = res._engine.factor_polys
    out = []
    cache = {}
    for b in res.affine_branches:
        if b.factor not in cache:
            phi = polys[b.factor]
            k = 0
            rest = h
            while not rest.is_zero() and phi.divides(rest):
                rest = rest.exact_divide(phi)
                k += 1
            cache[b.factor] = k
        out.append(cache[b.factor])
    return out


@dataclass(frozen=True)
class MeromorphicDivisorData:
    """``N = N_f - N_g`` split into its positive and negative parts."""

    values: tuple
    zero_part: tuple        # exceptional coefficients of the positive part
    pole_part: tuple        # exceptional coefficients of the negative part
    zero_affine: tuple      # affine coefficients of the positive part
    pole_affine: tuple


def meromorphic_parts(res: ResolutionData) -> MeromorphicDivisorData:
    N = res.values
    aff = [b.n for b in res.affine_branches]
    return MeromorphicDivisorData(
        values=N,
        zero_part=tuple(v if v > 0 else 0 for v in N),
        pole_part=tuple(v if v < 0 else 0 for v in N),
        zero_affine=tuple(v if v > 0 else 0 for v in aff),
        pole_affine=tuple(v if v < 0 else 0 for v in aff),
    )
