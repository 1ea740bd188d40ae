import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from qtree.coeffs import GF, QQ, BiPoly, FactorLimits, HForm, UniPoly, bi_factor, bi_irreducible, hform_factor, uni_factor
from qtree.errors import BudgetExceeded, UnsupportedField
from qtree.suites import random_poly

from conftest import P, form


def product(factors, F):
    out = BiPoly.const(F, 1)
    for q, m in factors:
        out = out * q**m
    return out


def test_factor_examples():
    F = GF(5)
    assert bi_factor(P("x^2 - y^2")) == [(P("y + x"), 1), (P("y - x"), 1)]
    assert bi_irreducible(P("y^2 - x^3"))
    facs = bi_factor(P("x^3*y^2*(y - x)^3"))
    assert dict(facs) == {P("x"): 3, P("y"): 2, P("y - x"): 3}
    assert product(facs, F) == P("x^3*y^2*(y - x)^3").normalize()


def test_uni_factor_examples():
    F = GF(5)
    u = UniPoly(F, [-2, 0, 1])  # t^2 - 2, no root mod 5
    assert uni_factor(u) == [(u, 1)]
    v = UniPoly(F, [-1, 0, 1])
    assert [g.degree for g, _ in uni_factor(v)] == [1, 1]


def test_hform_factor_multiplicative():
    rng = random.Random(4)
    F = GF(5)
    for _ in range(60):
        a = HForm(F, [rng.randrange(5) for _ in range(rng.randint(1, 4))])
        b = HForm(F, [rng.randrange(5) for _ in range(rng.randint(1, 4))])
        if a.is_zero() or b.is_zero():
            continue
        fa, fb, fab = dict(hform_factor(a)), dict(hform_factor(b)), dict(hform_factor(a * b))
        merged = dict(fa)
        for g, m in fb.items():
            merged[g] = merged.get(g, 0) + m
        assert merged == fab


def test_hform_nonrational_over_f5():
    facs = hform_factor(form("y^2 - 2*x^2"))
    assert [(g.degree, m) for g, m in facs] == [(2, 1)]


def test_hform_over_rationals():
    F = QQ
    h = HForm.from_bipoly(BiPoly.parse("y^2 - x^2", F))
    assert sorted(g.degree for g, _ in hform_factor(h)) == [1, 1]
    with pytest.raises(UnsupportedField):
        bi_factor(BiPoly.parse("x^2 - y^3", F))


def test_degree_cap():
    with pytest.raises(BudgetExceeded):
        bi_factor(P("x^9 + y^9 + x*y"), FactorLimits(degree_cap=5))


@settings(max_examples=120, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from([2, 3, 5, 7]))
def test_random_products_round_trip(seed, p):
    F = GF(p)
    rng = random.Random(seed)
    parts = [random_poly(rng, F, 0, rng.randint(1, 3)) for _ in range(rng.randint(1, 3))]
    if any(not q for q in parts):
        return
    f = product([(q, 1) for q in parts], F)
    facs = bi_factor(f)
    assert product(facs, F) == f.normalize() or (f.is_constant() and not facs)
    for q, _ in facs:
        assert bi_irreducible(q)


# Oracle: all products of two non-constant factors, computed with plain dicts.

def _all_polys(p, deg):
    mons = [(i, d - i) for d in range(deg + 1) for i in range(d + 1)]
    for cs in itertools.product(range(p), repeat=len(mons)):
        t = {m: c for m, c in zip(mons, cs) if c}
        if t and max(i + j for i, j in t) == deg:
            yield t


def _mul(a, b, p):
    out = {}
    for (i, j), c in a.items():
        for (k, l), d in b.items():
            out[(i + k, j + l)] = (out.get((i + k, j + l), 0) + c * d) % p
    return {m: c for m, c in out.items() if c}


def _reducible_set(p, max_deg):
    polys = {d: list(_all_polys(p, d)) for d in range(1, max_deg)}
    red = set()
    for d1 in range(1, max_deg):
        for d2 in range(d1, max_deg - d1 + 1):
            for a in polys[d1]:
                for b in polys[d2]:
                    red.add(frozenset(_mul(a, b, p).items()))
    return red


@pytest.mark.parametrize("p,sample", [(2, None), (3, 1500)])
def test_irreducibility_matches_enumeration(p, sample):
    F = GF(p)
    red = _reducible_set(p, 3)
    cands = [t for d in (1, 2, 3) for t in _all_polys(p, d)]
    if sample:
        cands = random.Random(0).sample(cands, sample)
    for t in cands:
        f = BiPoly(F, t)
        assert bi_irreducible(f) == (frozenset(t.items()) not in red), str(f)
