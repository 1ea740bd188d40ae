import random

import pytest
from hypothesis import given, settings, strategies as st

from qtree.approx import bezout_solve, lift_factorization
from qtree.coeffs import GF, HForm
from qtree.errors import PreconditionError
from qtree.suites import approx_instance, run_approx

from conftest import P, form


def test_bezout_examples():
    F = GF(5)
    X, Y = HForm.X(F), HForm.Y(F)
    a, b = bezout_solve(X, Y, form("x^2*y"))
    assert (a.to_bipoly(), b.to_bipoly()) == (P("0"), P("x*y"))
    a, b = bezout_solve(X, Y, form("x^3"))
    assert (a.to_bipoly(), b.to_bipoly()) == (P("0"), P("x^2"))


def test_bezout_rejects_common_factor():
    with pytest.raises(PreconditionError):
        bezout_solve(form("x"), form("x*y"), form("x^3"))


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10**6))
def test_bezout_solves(seed):
    rng = random.Random(seed)
    F = GF(7)
    f, G, H, _ = approx_instance(seed, F)
    d = G.degree + H.degree + rng.randint(0, 3)
    e = HForm(F, [rng.randrange(7) for _ in range(d + 1)])
    a, b = bezout_solve(G, H, e)
    assert (G * b).to_bipoly() + (H * a).to_bipoly() == e.to_bipoly()


def test_lift_examples():
    F = GF(5)
    res = lift_factorization(P("x*y + x^3 + y^3"), HForm.X(F), HForm.Y(F), 4)
    assert (res.g, res.h) == (P("x + y^2"), P("y + x^2"))
    assert res.remainder == P("-x^2*y^2")
    assert res.achieved_order == 4

    res = lift_factorization(P("x*y"), HForm.X(F), HForm.Y(F), 6)
    assert res.exact and res.achieved_order is None

    res = lift_factorization(P("x^2*y + y^4"), form("x^2"), HForm.Y(F), 6)
    assert (res.g, res.h) == (P("x^2 + y^3"), P("y"))


@pytest.mark.parametrize("f,G,H,n", [
    ("x*y", "x", "y", 2),
    ("x*y + 1", "x", "y", 4),
    ("x*y", "x^2", "y", 4),
    ("x^2", "x", "x", 4),
])
def test_lift_preconditions(f, G, H, n):
    with pytest.raises(PreconditionError):
        lift_factorization(P(f), form(G), form(H), n)


def test_lift_is_monotone_in_target():
    f, G, H, _ = approx_instance(11, GF(5))
    r = G.degree + H.degree
    short = lift_factorization(f, G, H, r + 2)
    long = lift_factorization(f, G, H, 12)
    k = G.degree + 2
    assert long.g.truncate(k) == short.g.truncate(k)
    assert long.h.truncate(H.degree + 2) == short.h.truncate(H.degree + 2)


@pytest.mark.parametrize("p", [3, 5, 7])
def test_random_lifts(p):
    F = GF(p)
    for s in range(40):
        assert run_approx(s, F).status == "verified"
