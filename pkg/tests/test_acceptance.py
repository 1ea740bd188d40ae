"""Acceptance criteria, one test each, with a PASS/FAIL line per criterion.

Time limits are wall-clock seconds measured inside the test.
"""

import itertools
import random
import time

import pytest

from qtree.coeffs import GF, BiPoly, bi_factor, bi_irreducible
from qtree.primelemma import seed_prime
from qtree.rlr import INF, EssentialVal, Finite, QuadPath, contains, contains_by_valuation, follow_branch, member
from qtree.suites import random_path, random_poly, run_approx, run_check, run_prime_lemma
from qtree.theorems import IncomparableSet, find_witness

from test_factor import _all_polys, _reducible_set

LIMIT_APPROX = 30.0
LIMIT_PRIME_LEMMA = 120.0
LIMIT_UNIQUE = 180.0
LIMIT_WITNESS = 10.0


@pytest.fixture
def verdict(capsys):
    def report(n, ok, detail):
        with capsys.disabled():
            print(f"\ncriterion {n}: {'PASS' if ok else 'FAIL'} ({detail})")
    return report


def test_criterion_1_lifting_suite(verdict):
    t0 = time.perf_counter()
    bad = []
    for p in (3, 5, 7):
        for s in range(300):
            r = run_approx(s, GF(p))
            if r.status != "verified":
                bad.append((p, s))
    dt = time.perf_counter() - t0
    ok = not bad and dt < LIMIT_APPROX
    verdict(1, ok, f"900 lifts, {len(bad)} failures, {dt:.1f}s < {LIMIT_APPROX:.0f}s")
    assert not bad
    assert dt < LIMIT_APPROX


def test_criterion_2_prime_lemma_suite(verdict):
    t0 = time.perf_counter()
    reports = [run_prime_lemma(s, GF(5), 4) for s in range(100)]
    dt = time.perf_counter() - t0
    bad = [r.seed for r in reports if r.status != "verified"]
    ok = not bad and dt < LIMIT_PRIME_LEMMA
    verdict(2, ok, f"100 nodes, {len(bad)} failures, {dt:.1f}s < {LIMIT_PRIME_LEMMA:.0f}s")
    assert not bad
    assert dt < LIMIT_PRIME_LEMMA


def test_criterion_3_unique_essential_suite(verdict):
    t0 = time.perf_counter()
    bad = []
    for i in range(200):
        F = GF(3) if i % 2 else GF(5)
        r = run_check("unique-essential", i, F, 1 + i % 6, 4)
        if r.status != "verified":
            bad.append(r.to_json())
    dt = time.perf_counter() - t0
    ok = not bad and dt < LIMIT_UNIQUE
    verdict(3, ok, f"200 sets, {len(bad)} counterexamples, {dt:.1f}s < {LIMIT_UNIQUE:.0f}s")
    assert not bad
    assert dt < LIMIT_UNIQUE


def test_criterion_4_depth_one_witnesses(verdict):
    F = GF(5)
    nodes = [QuadPath(F, (Finite(c),)) for c in range(5)] + [QuadPath(F, (INF,))]
    t0 = time.perf_counter()
    bad = []
    for a, b in itertools.combinations(nodes, 2):
        X = IncomparableSet((a, b))
        for i in (0, 1):
            w = find_witness(X, i)
            if w is None or not member(X.members[1 - i], w) or member(X.members[i], w):
                bad.append((str(a), str(b), i))
    hand = (
        str(find_witness(IncomparableSet((nodes[0], nodes[1])), 0)),
        str(find_witness(IncomparableSet((nodes[0], nodes[5])), 1)),
    )
    dt = time.perf_counter() - t0
    ok = not bad and hand == ("x/y", "y/x") and dt < LIMIT_WITNESS
    verdict(4, ok, f"30 searches, {len(bad)} failures, hand cases {hand}, {dt:.1f}s < {LIMIT_WITNESS:.0f}s")
    assert not bad
    assert hand == ("x/y", "y/x")
    assert dt < LIMIT_WITNESS


def _product(facs, F):
    out = BiPoly.const(F, 1)
    for q, m in facs:
        out = out * q**m
    return out


def test_criterion_5_kernel_oracles(verdict):
    F5 = GF(5)
    rng = random.Random(2024)
    round_trip = 0
    for _ in range(500):
        f = random_poly(rng, F5, 0, rng.randint(1, 10), density=rng.choice([0.2, 0.5]))
        if rng.random() < 0.3:
            f = f * random_poly(rng, F5, 0, 3)
        if not f:
            f = BiPoly.const(F5, 1)
        facs = bi_factor(f)
        if not (_product(facs, F5) == f.normalize() or (f.is_constant() and not facs)):
            round_trip += 1

    enum = 0
    for p in (2, 3):
        F = GF(p)
        red = _reducible_set(p, 3)
        for t in (t for d in (1, 2, 3) for t in _all_polys(p, d)):
            if bi_irreducible(BiPoly(F, t)) != (frozenset(t.items()) not in red):
                enum += 1

    dual = 0
    for _ in range(1000):
        node = random_path(rng, F5, rng.randint(0, 4))
        if rng.random() < 0.5:
            q = seed_prime(random_path(rng, F5, len(node)) if rng.random() < 0.3 else node, seed=rng.randrange(50)).p
        else:
            q = next(
                g for f in iter(lambda: random_poly(rng, F5, 1, 3), None) if f
                for g, _ in bi_factor(f) if g.vanishes_at_origin()
            )
        v = EssentialVal(q)
        if contains(v, node) != contains_by_valuation(v, node):
            dual += 1
    total = round_trip + enum + dual
    verdict(5, total == 0, f"round trip {round_trip}, enumeration {enum}, dual contains {dual} discrepancies")
    assert total == 0


def test_criterion_6_cusp_regression(verdict):
    F = GF(5)
    cusp = BiPoly.parse("y^2 - x^3", F)
    chain, orders = follow_branch(cusp, 2)
    deeper, deeper_orders = follow_branch(cusp, 3)
    ok = (
        chain.dirs == (Finite(0), INF)
        and orders == [2, 1, 1]
        and deeper.dirs[:2] == chain.dirs
        and deeper_orders[:3] == orders
    )
    verdict(6, ok, f"chain {chain}, r = {tuple(orders)}")
    assert chain.dirs == (Finite(0), INF)
    assert orders == [2, 1, 1]
    assert deeper_orders[:3] == orders
