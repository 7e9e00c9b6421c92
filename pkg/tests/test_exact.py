import ast
from fractions import Fraction
from pathlib import Path

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from merojump.exact import (RATIONALS, BivariatePolynomial, NumberField, PolynomialSyntaxError, adjoin_root,
                            factor, parse_polynomial, parse_rational, poly_gcd, squarefree_part,
                            univariate_roots_with_multiplicity)
from merojump.exact import univariate as up
from merojump.exact.bivariate import factor_rational, from_sympy, to_sympy

P = parse_polynomial
X, Y = sympy.symbols("x y")


# -- parser -------------------------------------------------------------------

def test_parse_basic_expression():
    p = P("(y^2-x^3)^4 + x^8*y^5")
    assert p.coefficient(0, 8) == 1
    assert p.coefficient(12, 0) == 1
    assert p.coefficient(8, 5) == 1
    assert p.coefficient(3, 6) == -4


def test_parse_rational_literals_and_unary_minus():
    p = P("-5/2*x + 3/4")
    assert p.coefficient(1, 0) == Fraction(-5, 2)
    assert p.coefficient(0, 0) == Fraction(3, 4)


@pytest.mark.parametrize("text", ["x y", "2x", "x(y+1)", "(x)(y)"])
def test_implicit_multiplication_rejected(text):
    with pytest.raises(PolynomialSyntaxError, match="implicit multiplication"):
        P(text)


@pytest.mark.parametrize("text", ["x^", "x+*y", "(x+y", "z", "x^-1", "x^1/2", ""])
def test_malformed_input_rejected(text):
    with pytest.raises(PolynomialSyntaxError):
        P(text)


def test_syntax_error_reports_position():
    with pytest.raises(PolynomialSyntaxError) as info:
        P("x^2 +\n  y $ 3")
    assert "line 2" in str(info.value)
    assert "column" in str(info.value)


def test_parse_rational_values():
    assert parse_rational("47/93") == Fraction(47, 93)
    assert parse_rational("-3") == -3
    with pytest.raises(ValueError):
        parse_rational("1.5")


# -- bivariate arithmetic -------------------------------------------------------

def test_no_stored_zero_coefficients():
    p = P("x^2 - x^2 + y")
    assert dict(p.items()) == {(0, 1): 1}


def test_degree_and_order():
    p = P("x^3*y + x^2 + y^5")
    assert p.degree() == 5
    assert p.order() == 2


def test_gcd_examples():
    assert poly_gcd(P("x"), P("y")) == P("1")
    assert poly_gcd(P("(y^2-x^3)*x"), P("(y^2-x^3)*y")).normalized() == P("y^2-x^3").normalized()
    assert poly_gcd(P("(y^2-x^3)^4+x^8*y^5"), P("y^2-x^3")) == P("1")


def test_gcd_of_zeros_is_an_error():
    with pytest.raises(ValueError):
        poly_gcd(P("0"), P("0"))


def test_squarefree_part_examples():
    assert squarefree_part(P("x^2*y^3")).normalized() == P("x*y").normalized()
    assert squarefree_part(P("(y^2-x^3)^2")).normalized() == P("y^2-x^3").normalized()
    f3 = P("(y^2-x^3)^5+x^18")
    assert squarefree_part(f3).normalized() == f3.normalized()
    with pytest.raises(ValueError):
        squarefree_part(P("0"))


def test_factor_rational_multiplicities():
    fac = factor_rational(P("x^2*(y^2-x^3)^3*(y+1)"))
    mults = sorted(m for _, m in fac)
    assert mults == [1, 2, 3]


def test_sympy_round_trip():
    p = P("3/2*x^4*y - 7*y^3 + 1")
    assert from_sympy(to_sympy(p)) == p


small = st.integers(min_value=-4, max_value=4)
monomial = st.tuples(st.integers(0, 3), st.integers(0, 3))
poly_strategy = st.dictionaries(monomial, small, max_size=5).map(
    lambda d: BivariatePolynomial({k: v for k, v in d.items() if v}))


@settings(max_examples=60, deadline=None)
@given(poly_strategy, poly_strategy, poly_strategy)
def test_gcd_with_common_factor(p, q, c):
    if p.is_zero() or q.is_zero() or c.is_zero():
        return
    pc, qc = p * c, q * c
    h = poly_gcd(pc, qc)
    assert h.divides(pc) and h.divides(qc)
    if poly_gcd(p, q).degree() == 0:
        assert (c.normalized() == h.normalized()) or (c.degree() == 0 and h.degree() == 0)


@settings(max_examples=40, deadline=None)
@given(poly_strategy, st.integers(1, 3))
def test_squarefree_part_of_powers(p, n):
    if p.is_zero():
        return
    assert squarefree_part(p ** n).normalized() == squarefree_part(p).normalized()


@settings(max_examples=60, deadline=None)
@given(poly_strategy, poly_strategy)
def test_ring_laws_against_sympy(p, q):
    lhs = to_sympy(p * q + p).as_expr()
    rhs = sympy.expand(to_sympy(p).as_expr() * to_sympy(q).as_expr() + to_sympy(p).as_expr()) \
        if not p.is_zero() else 0
    assert sympy.expand(lhs - rhs) == 0


@settings(max_examples=60, deadline=None)
@given(poly_strategy)
def test_format_parse_round_trip(p):
    assert P(str(p)) == p


# -- number fields and roots ---------------------------------------------------

def test_roots_of_t2_minus_1():
    roots = univariate_roots_with_multiplicity([-1, 0, 1])
    assert sorted((r.value, r.multiplicity) for r in roots) == [(-1, 1), (1, 1)]


def test_roots_with_multiplicity():
    roots = univariate_roots_with_multiplicity([0, 0, 0, 1])
    assert [(r.value, r.multiplicity) for r in roots] == [(0, 3)]


def test_irrational_root_class():
    (r,) = univariate_roots_with_multiplicity([-2, 0, 1])
    assert r.class_size == 2
    assert r.field.degree == 2
    assert r.value * r.value == r.field.coerce(2)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(-5, 5), min_size=2, max_size=6))
def test_root_count_matches_degree(coeffs):
    p = up.trim([Fraction(c) for c in coeffs])
    if len(p) < 2:
        return
    roots = univariate_roots_with_multiplicity(p)
    assert sum(r.multiplicity * r.class_size for r in roots) == len(p) - 1


def test_tower_arithmetic():
    K, _, a = adjoin_root(RATIONALS, [-2, 0, 1])           # sqrt 2
    L, emb, b = adjoin_root(K, [K.coerce(-3), 0, 1])        # sqrt 3 over Q(sqrt 2)
    assert L.degree == 4
    s = emb(a) + b
    assert s * s == L.coerce(5) + 2 * emb(a) * b
    assert (s * s.inverse()) == L.coerce(1)


def test_factor_over_extension_splits():
    K, _, i = adjoin_root(RATIONALS, [1, 0, 1])
    fac = factor(K, [K.coerce(1), 0, K.coerce(1)])
    assert [len(f) - 1 for f, _ in fac] == [1, 1]


def test_minimal_polynomial_must_be_irreducible_to_adjoin():
    fac = factor(RATIONALS, [-1, 0, 1])
    assert all(len(f) == 2 for f, _ in fac)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(-6, 6), min_size=2, max_size=2), st.lists(st.integers(-6, 6), min_size=2, max_size=2))
def test_field_inverse_and_distributivity(u, v):
    K = NumberField([-5, 0, 1])
    a, b = K.element(u), K.element(v)
    c = K.element([1, 1])
    assert a * (b + c) == a * b + a * c
    if a != K.coerce(0):
        assert a * a.inverse() == K.coerce(1)


def test_kernel_never_uses_floats():
    """Audit hook: no float literal or float() call in the exact kernel."""
    root = Path(__file__).resolve().parents[1] / "src" / "merojump" / "exact"
    for path in root.glob("*.py"):
        tree = ast.parse(path.read_text())
        for node in ast.walk(tree):
            if isinstance(node, ast.Constant):
                assert not isinstance(node.value, float), f"float literal in {path.name}"
            if isinstance(node, ast.Call) and getattr(node.func, "id", None) == "float":
                raise AssertionError(f"float() call in {path.name}")
