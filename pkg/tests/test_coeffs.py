from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qtree.coeffs import GF, QQ, BiPoly, Field, HForm, UniPoly, bi_gcd, bi_lcm, poly_arith, uni_gcd
from qtree.errors import FieldMismatch, ParseError, PreconditionError

from conftest import P


def test_field_parse_and_arithmetic():
    F = Field.parse("5")
    assert F == GF(5) and F.is_finite
    assert F.inv(2) == 3
    assert F("-1") == 4
    assert QQ("3/6") == Fraction(1, 2)
    assert not QQ.is_finite


@pytest.mark.parametrize("bad", ["6", "1", "x", "65537"])
def test_field_rejects(bad):
    with pytest.raises(ParseError):
        Field.parse(bad)


def test_parse_normalizes_terms(F5):
    assert str(P("y^2 - x^3")) == "-x^3 + y^2"
    assert P("(x+y)^2") == P("x^2 + 2*x*y + y^2")
    assert P("6*x") == P("x")


@pytest.mark.parametrize("bad", ["x**2", "x+*", "z", "import os", "x^-1", "x/(x-x)"])
def test_parse_errors(bad):
    with pytest.raises(ParseError):
        P(bad)


def test_poly_arith_examples():
    assert poly_arith(P("x + y"), P("x - y"), "mul") == P("x^2 - y^2")
    assert poly_arith(P("x"), P("x"), "sub") == BiPoly.zero(GF(5))
    with pytest.raises(FieldMismatch):
        poly_arith(P("x"), BiPoly.parse("x", GF(3)), "add")


def test_ord_and_initial_part():
    f = P("x^2 + y^3")
    assert f.ord() == 2
    assert f.homogeneous_part(2) == P("x^2")
    assert not P("1 + x").vanishes_at_origin()


coef = st.integers(0, 4)
terms = st.dictionaries(st.tuples(st.integers(0, 4), st.integers(0, 4)), coef, max_size=6)


def bp(t):
    return BiPoly(GF(5), t)


@settings(max_examples=500, deadline=None)
@given(terms, terms, terms)
def test_ring_axioms(a, b, c):
    a, b, c = bp(a), bp(b), bp(c)
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == BiPoly.zero(GF(5))


@settings(max_examples=200, deadline=None)
@given(terms, terms)
def test_divmod_reconstructs(a, b):
    a, b = bp(a), bp(b)
    if not b:
        return
    q, r = a.divmod(b)
    assert q * b + r == a


@settings(max_examples=150, deadline=None)
@given(terms, terms, terms)
def test_gcd_properties(a, b, c):
    a, b, c = bp(a), bp(b), bp(c)
    if not a or not b or not c:
        return
    g = bi_gcd(a * c, b * c)
    assert g.divides(a * c) and g.divides(b * c)
    assert g == (c * bi_gcd(a, b)).normalize()
    assert bi_gcd(a, b) == bi_gcd(b, a)
    l = bi_lcm(a, b)
    assert a.divides(l) and b.divides(l)


def test_gcd_examples():
    assert bi_gcd(P("x^2*y"), P("x*y^2")) == P("x*y")
    assert bi_gcd(P("y^2 - x^3"), P("y")).is_constant()
    with pytest.raises(PreconditionError):
        bi_gcd(BiPoly.zero(GF(5)), BiPoly.zero(GF(5)))


def test_unipoly_gcd_and_division():
    F = GF(5)
    a = UniPoly(F, [1, 0, 1])  # t^2 + 1 = (t-2)(t-3)
    b = UniPoly(F, [-2, 1])
    assert uni_gcd(a, b) == b.monic()
    q, r = divmod(a, b)
    assert q * b + r == a and r.degree < 1


def test_hform_is_coeff_vector():
    F = GF(5)
    h = HForm.from_bipoly(P("x^2 - y^2"))
    assert h.coeffs == (1, 0, 4)
    assert h.to_bipoly() == P("x^2 - y^2")
    assert (HForm.X(F) * HForm.Y(F)).to_bipoly() == P("x*y")


def test_substitution():
    f = P("y^2 - x^3")
    assert f.compose(P("x*y"), P("x*y^2")) == P("x^2*y^4 - x^3*y^3")
    assert f(1, 1) == 0
    assert f.swap() == P("x^2 - y^3")
