from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from merojump.exact import parse_polynomial as P
from merojump.exact import poly_gcd, squarefree_part
from merojump.exact.bivariate import to_sympy
from merojump.puiseux import (InsufficientPrecision, NoSingularityError, branch_contact,
                              intersection_multiplicity, newton_polygon, puiseux_branches, verify_branch)


def resultant_order(p, q):
    """Order in x of Res_y(p, q): the intersection number at the origin for y-monic inputs."""
    x, y = sympy.symbols("x y")
    r = sympy.Poly(sympy.expand(sympy.resultant(to_sympy(p).as_expr(), to_sympy(q).as_expr(), y)), x)
    return min(m[0] for m in r.monoms())


def test_polygon_of_cusp():
    (edge,) = newton_polygon(P("y^2-x^3")).edges
    assert (edge.start, edge.end, edge.inclination) == ((0, 2), (3, 0), Fraction(3, 2))


def test_polygon_of_smooth_branch_is_a_vertex():
    (edge,) = newton_polygon(P("y")).edges
    assert edge.start == edge.end == (0, 1)
    assert edge.inclination is None


def test_polygon_edges_increase():
    poly = newton_polygon(P("(y^2-x^3)*(y-x)"))
    assert poly.inclinations == [1, Fraction(3, 2)]


def test_polygon_rejects_units():
    with pytest.raises(NoSingularityError, match="no singularity at origin"):
        newton_polygon(P("1+x"))


def test_cusp_branch():
    (b,) = puiseux_branches(P("y^2-x^3"), 4)
    assert b.e == 2 and b.class_size == 1
    assert [(k, a) for k, a in b.terms] == [(3, 1)]
    assert b.exact


def test_smooth_branch_y():
    (b,) = puiseux_branches(P("y"), 2)
    assert b.e == 1 and b.terms == ()


def test_two_lines():
    bs = puiseux_branches(P("y^2-x^2"), 3)
    assert sorted(b.terms[0][1] for b in bs) == [-1, 1]


def test_conjugate_lines_form_one_class():
    (b,) = puiseux_branches(P("y^2+x^2"), 3)
    assert b.class_size == 2 and b.e == 1


def test_y_axis_branch_is_swapped():
    bs = puiseux_branches(P("x*(y-x^2)"), 3)
    assert [b.swapped for b in bs] == [True, False]


def test_contact_examples():
    a, b = puiseux_branches(P("(y^2-x^3)*(y-x)"), 4)
    assert branch_contact(a, b) == 1
    c, d = puiseux_branches(P("y*(y-x^5)"), 6)
    assert branch_contact(c, d) == 5


def test_self_contact_over_conjugates():
    (b,) = puiseux_branches(P("y^2-2*x^3"), 4)
    assert branch_contact(b, b) == Fraction(3, 2)
    (c,) = puiseux_branches(P("(y^2-x^3)^2-4*x^5*y-x^7"), 4)
    assert branch_contact(c, c) == Fraction(7, 4)


def test_identical_parametrizations_raise():
    (b,) = puiseux_branches(P("y-x"), 2)
    with pytest.raises(InsufficientPrecision):
        branch_contact(b, b)


def test_insufficient_precision():
    # one irreducible factor whose two conjugate branches part at exponent 7
    with pytest.raises(InsufficientPrecision):
        puiseux_branches(P("(y-x^3)^2-2*x^14"), 2)


def test_characteristic_exponents_of_example_germ():
    (b,) = puiseux_branches(P("(y^2-x^3)^4+x^8*y^5"))
    assert b.e == 8
    assert b.exponents()[:2] == [Fraction(3, 2), Fraction(19, 8)]
    assert verify_branch(b, P("(y^2-x^3)^4+x^8*y^5"))


@pytest.mark.parametrize("text", ["y^2-x^3-x^4", "(y^2-x^3)^5+x^18", "y^3-x^5+x^4*y", "(y^2-x^3)*(y^2+x^3)*(y-x)"])
def test_branches_vanish_to_precision(text):
    p = P(text)
    bs = puiseux_branches(p)
    assert all(verify_branch(b, p) for b in bs)
    # class sizes times ramification add up to the y-order of p(0, y)
    assert sum(b.class_size * b.e for b in bs) == min(j for (i, j), _ in p.items() if i == 0)


PAIRS = [
    ("y^2-x^3-x^4", "y"),
    ("y^2-x^3-x^4", "y^2-x^3"),
    ("(y^2-x^3)^2-4*x^5*y-x^7", "y^2-x^3+x^5"),
    ("y^3-x^5+x^4*y", "y^2-x^3"),
    ("(y^2-x^3)^4+x^8*y^5", "y^2-x^3"),
    ("(y^2-x^3)^4+x^8*y^5", "y^2+x^3"),
    ("(y^2+x^2)*(y-x^3)", "y^2-2*x^3"),
]


@pytest.mark.parametrize("p,q", PAIRS)
def test_intersection_numbers_match_resultant(p, q):
    p, q = P(p), P(q)
    total = sum(intersection_multiplicity(b, q) for b in puiseux_branches(p))
    assert total == resultant_order(p, q)


def _structure(b):
    def coords(a):
        return tuple(b.field.coordinates(a))

    return b.e, b.class_size, b.factor, b.field.modulus, tuple((k, coords(a)) for k, a in b.terms)


def test_determinism():
    p = P("(y^2-x^3)*(y^2+x^3)*(y^2-2*x^5)")
    first = [_structure(b) for b in puiseux_branches(p, 6)]
    second = [_structure(b) for b in puiseux_branches(p, 6)]
    assert first == second


branch_factor = st.tuples(st.integers(1, 3), st.integers(1, 7), st.sampled_from([-2, -1, 1, 2, 3]))


@settings(max_examples=25, deadline=None)
@given(st.lists(branch_factor, min_size=1, max_size=3, unique_by=lambda t: (t[0], t[1])),
       branch_factor)
def test_noether_formula_on_random_germs(factors, other):
    """Products of y^a - c*x^b are y-monic, so all x = 0 intersections sit at the origin."""
    def germ(a, b, c):
        return P(f"y^{a}-({c})*x^{b}")

    p = P("1")
    for a, b, c in factors:
        p = p * germ(a, b, c)
    q = germ(*other)
    if poly_gcd(p, q).degree() > 0 or squarefree_part(p).degree() != p.degree():
        return
    total = sum(intersection_multiplicity(b, q) for b in puiseux_branches(p))
    assert total == resultant_order(p, q)
