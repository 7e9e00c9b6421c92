import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from merojump import parse_polynomial as P
from merojump.divisors import (Divisor, excess, ideal_of, intersection_matrix, is_antinef, simple_divisor,
                               unload, zariski_factorize)
from merojump.multiplier import canonical_divisor, zero_part
from merojump.resolution import ResolutionData, valuation_vector


def lattice(prox):
    """A bare resolution with the given proximity rows and no curve data."""
    n = len(prox)
    k = []
    for i in range(n):
        k.append(1 + sum(k[j] for j in range(i) if prox[i][j] == -1))
    zeros = (0,) * n
    return ResolutionData(tuple(tuple(r) for r in prox), tuple(k), zeros, zeros, (), (False,) * n)


def random_lattice(rng, n):
    """Random cluster of ``n`` infinitely near points: free or satellite at each step."""
    prox = [[0] * n for _ in range(n)]
    curves = [()]               # exceptional curves through each point (besides its own)
    taken = set()               # satellite positions already used: (parent, other)
    prox[0][0] = 1
    for i in range(1, n):
        prox[i][i] = 1
        parent = rng.randrange(i)
        options = [j for j in curves[parent] if (parent, j) not in taken]
        if options and rng.random() < 0.5:
            other = rng.choice(options)
            taken.add((parent, other))
            prox[i][parent] = prox[i][other] = -1
            curves.append((parent, other))
        else:
            prox[i][parent] = -1
            curves.append((parent,))
    return lattice(prox)


def gram(res):
    Pm = np.array(res.proximity, dtype=np.int64)
    return Pm.T @ Pm


def brute_force_closure(res, D0):
    """Componentwise least antinef divisor in the box [D0, bound]; ``None`` if none there."""
    G = gram(res)
    bound = np.array([int(v) for v in unload(Divisor.of(res, D0)).exc])
    lo = np.array(D0)
    axes = [np.arange(a, b + 1) for a, b in zip(lo, bound)]
    grid = np.array(np.meshgrid(*axes, indexing="ij")).reshape(len(axes), -1).T
    ok = grid[((grid @ G.T) >= 0).all(axis=1)]
    if len(ok) == 0:
        return None
    least = ok.min(axis=0)
    # the componentwise minimum must itself be antinef (closure property)
    assert ((G @ least) >= 0).all()
    return tuple(int(v) for v in least)


def test_intersection_matrix_examples(cusp):
    assert intersection_matrix(lattice([[1]])) == [[-1]]
    assert intersection_matrix(lattice([[1, 0], [-1, 1]])) == [[-2, 1], [1, -1]]
    assert intersection_matrix(cusp) == [[-3, 0, 1], [0, -2, 1], [1, 1, -1]]


def test_antinef_examples(cusp):
    assert is_antinef(Divisor.zero(cusp))
    assert not is_antinef(Divisor.of(cusp, (0, 0, 1)))
    assert excess(Divisor.of(cusp, (0, 0, 1)))[0] == -1
    assert is_antinef(Divisor.of(cusp, (1, 1, 2)))
    assert excess(Divisor.of(cusp, (1, 1, 2))) == (1, 0, 0)
    with pytest.raises(ValueError):
        is_antinef(Divisor.of(cusp, (Fraction(1, 2), 1, 2)))


def test_unload_examples(cusp):
    assert unload(Divisor.of(cusp, (0, 0, 1))).exc == (1, 1, 2)
    assert unload(Divisor.of(cusp, (0, 1, 0))).exc == (1, 1, 2)
    D = Divisor.of(cusp, (2, 3, 6))
    assert unload(D) == D


def test_unload_keeps_affine_part(cusp):
    D = Divisor.of(cusp, (0, 0, 0), (Fraction(3, 2),))
    out = unload(D)
    assert out.aff == (2,)
    assert is_antinef(out)


def test_simple_divisors(cusp):
    single = lattice([[1]])
    assert simple_divisor(0, single).exc == (1,)
    assert simple_divisor(0, cusp).exc == (1, 1, 2)
    assert simple_divisor(2, cusp).exc == (2, 3, 6)
    assert excess(simple_divisor(2, cusp)) == (0, 0, 1)


def test_zariski_examples(cusp):
    assert zariski_factorize(Divisor.zero(cusp)) == []
    assert zariski_factorize(Divisor.of(cusp, (1, 1, 2))) == [(1, 0)]
    assert zariski_factorize(Divisor.of(cusp, (2, 3, 6), (1,))) == []
    with pytest.raises(ValueError):
        zariski_factorize(Divisor.of(cusp, (0, 0, 1)))


def test_unloading_matches_exhaustive_oracle():
    rng = random.Random(20240601)
    checked = 0
    for _ in range(250):
        res = random_lattice(rng, rng.randint(1, 6))
        D0 = tuple(rng.randint(0, 8) for _ in range(res.size))
        closure = unload(Divisor.of(res, D0))
        assert is_antinef(closure)
        assert closure >= Divisor.of(res, D0)
        assert brute_force_closure(res, D0) == tuple(int(v) for v in closure.exc)
        checked += 1
    assert checked >= 200


def test_closure_is_below_every_antinef_majorant():
    """Independent of the search box: the closure sits below random antinef majorants."""
    rng = random.Random(7)
    for _ in range(100):
        res = random_lattice(rng, rng.randint(2, 6))
        D0 = Divisor.of(res, [rng.randint(0, 8) for _ in range(res.size)])
        closure = unload(D0)
        for _ in range(5):
            weights = [rng.randint(0, 3) for _ in range(res.size)]
            big = Divisor.of(res, [0] * res.size)
            for i, w in enumerate(weights):
                big = big + simple_divisor(i, res).scale(w + 8)
            if big >= D0:
                assert closure <= big


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10_000), st.integers(1, 6), st.lists(st.fractions(-4, 8), min_size=6, max_size=6))
def test_unload_properties(seed, n, coeffs):
    res = random_lattice(random.Random(seed), n)
    D = Divisor.of(res, coeffs[:n])
    out = unload(D)
    assert out >= D.ceil()
    assert is_antinef(out)
    assert unload(out) == out
    # sums of antinef divisors stay antinef
    assert is_antinef(out + simple_divisor(n - 1, res))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10_000), st.integers(1, 6))
def test_intersection_form_negative_definite(seed, n):
    G = gram(random_lattice(random.Random(seed), n))
    for k in range(1, n + 1):
        assert round(np.linalg.det(G[:k, :k])) > 0


def test_simple_divisor_columns_match_inverse_gram(ex1):
    G = np.array(gram(ex1), dtype=object)
    for i in (0, 5, ex1.size - 1):
        d = simple_divisor(i, ex1)
        rho = [sum(G[r][c] * d.exc[c] for c in range(ex1.size)) for r in range(ex1.size)]
        assert rho == [int(r == i) for r in range(ex1.size)]


MONOMIALS = [(a, b) for a in range(21) for b in range(21) if a + b <= 20]


@pytest.mark.parametrize("lam", ["5/18", "11/18", "70/93", "1"])
def test_closure_defines_the_same_ideal(ex1, lam):
    lam = Fraction(lam)
    D = (zero_part(ex1).scale(lam) - canonical_divisor(ex1)).floor()
    vx, vy = valuation_vector(P("x"), ex1), valuation_vector(P("y"), ex1)
    closure = unload(D)
    # monomials have order 0 along the strict transforms of f and g
    for a, b in MONOMIALS:
        v = [a * s + b * t for s, t in zip(vx, vy)]
        before = all(x >= c for x, c in zip(v, D.exc)) and all(c <= 0 for c in D.aff)
        after = all(x >= c for x, c in zip(v, closure.exc)) and all(c <= 0 for c in closure.aff)
        assert before == after, (a, b)
        assert before == ideal_of(D)(P(f"x^{a}*y^{b}"))


def test_membership_examples(cusp, ex1):
    assert ideal_of(Divisor.zero(cusp))(P("1"))
    member = ideal_of(Divisor.of(cusp, (1, 1, 2)))
    assert member(P("x")) and member(P("y")) and not member(P("1"))
    from merojump.multiplier import multiplier_divisor

    at_one = ideal_of(multiplier_divisor(ex1, 1))
    f = P("(y^2-x^3)^4+x^8*y^5")
    assert at_one(f) and at_one(f * P("x+y^7"))
    assert not at_one(P("(y^2-x^3)^4")) and not at_one(P("x^20"))


def test_divisor_arithmetic(cusp):
    a = Divisor.of(cusp, (Fraction(1, 2), 2, -1))
    b = Divisor.of(cusp, (1, 1, 1))
    assert (a + b - b) == a
    assert a.ceil().exc == (1, 2, -1) and a.floor().exc == (0, 2, -1)
    assert a.positive_part().exc == (Fraction(1, 2), 2, 0)
    assert (2 * a).exc == (1, 4, -2)
    with pytest.raises(ValueError):
        Divisor.of(cusp, (1, 2))
