"""Seeded instance generators and the batch runners behind ``qtree suite``/``check``.

Instance ``i`` of a run with base seed ``s`` uses seed ``s + i``, so any
reported instance can be rerun on its own.
"""

from __future__ import annotations

import random
import time

from .approx import _coprime, lift_factorization
from .coeffs import BiPoly, Field, HForm, bi_factor
from .coeffs.factor import DEFAULT_LIMITS, FactorLimits
from .primelemma import analyze, comparability_guarantee, prime_lemma
from .rlr import INF, Direction, EssentialVal, QuadPath
from .theorems import (
    COUNTEREXAMPLE,
    VERIFIED,
    CheckReport,
    IncomparableSet,
    check_comparability,
    check_irredundance,
    check_localization,
    check_unique_essential,
    leaf_capacity,
    random_incomparable,
)


def random_form(rng: random.Random, F: Field, degree: int) -> HForm:
    while True:
        h = HForm(F, [rng.randrange(F.p) for _ in range(degree + 1)])
        if not h.is_zero():
            return h


def random_poly(rng: random.Random, F: Field, lo: int, hi: int, density: float = 0.5) -> BiPoly:
    """Random polynomial with terms of total degree in ``[lo, hi]``."""
    terms = {}
    for d in range(lo, hi + 1):
        for i in range(d + 1):
            if rng.random() < density:
                c = rng.randrange(F.p)
                if c:
                    terms[(d - i, i)] = c
    return BiPoly(F, terms)


def random_path(rng: random.Random, F: Field, depth: int) -> QuadPath:
    return QuadPath(F, tuple(INF if (c := rng.randrange(F.p + 1)) == F.p else Direction(c) for _ in range(depth)))


def approx_instance(seed: int, F: Field):
    """``(f, G, H, n)`` with ``G, H`` coprime of degree ``<= 4`` and ``n <= 12``."""
    rng = random.Random(seed)
    while True:
        G = random_form(rng, F, rng.randint(1, 4))
        H = random_form(rng, F, rng.randint(1, 4))
        if _coprime(G, H):
            break
    r = G.degree + H.degree
    tail = random_poly(rng, F, r + 1, max(r + 1, 8)) if r < 8 else BiPoly.zero(F)
    f = (G * H).to_bipoly() + tail
    n = rng.randint(r + 1, max(r + 1, 12))
    return f, G, H, n


def run_approx(seed: int, F: Field) -> CheckReport:
    t0 = time.perf_counter()
    f, G, H, n = approx_instance(seed, F)
    res = lift_factorization(f, G, H, n)
    g_in = HForm.from_bipoly(res.g.homogeneous_part(G.degree)).normalize()
    h_in = HForm.from_bipoly(res.h.homogeneous_part(H.degree)).normalize()
    rem = f - res.g * res.h
    failures = []
    if res.g.ord() != G.degree or g_in != G.normalize():
        failures.append("in(g) != G")
    if res.h.ord() != H.degree or h_in != H.normalize():
        failures.append("in(h) != H")
    if rem and rem.ord() < n:
        failures.append("ord(f - gh) < n")
    extra = {"f": str(f), "G": str(G), "H": str(H), "n": n, "g": str(res.g), "h": str(res.h)}
    if failures:
        extra["failures"] = failures
    return CheckReport("approx", str(F.p), seed, [], COUNTEREXAMPLE if failures else VERIFIED,
                       {}, extra, time.perf_counter() - t0)


def run_prime_lemma(seed: int, F: Field, max_depth: int, budget: int = 20,
                    limits: FactorLimits = DEFAULT_LIMITS) -> CheckReport:
    t0 = time.perf_counter()
    rng = random.Random(seed)
    beta = random_path(rng, F, rng.randint(0, max_depth))
    res = prime_lemma(beta, seed=seed, budget=budget, limits=limits)
    seq = analyze(res.v, beta)
    rep = comparability_guarantee(res.v, beta, len(beta) + 1)
    failures = []
    if seq.failing_levels():
        failures.append(f"levels {seq.failing_levels()} are not prime powers")
    if not rep.contains_beta:
        failures.append("v does not contain beta")
    failures += [f"contains incomparable {g}" for g in rep.counterexamples]
    extra = {"orders": seq.orders, "lifts": len(res.steps), "nodes_checked": rep.nodes_checked}
    if failures:
        extra["failures"] = failures
    return CheckReport("prime-lemma", str(F.p), seed, [str(beta)], COUNTEREXAMPLE if failures else VERIFIED,
                       {str(beta): str(res.v)}, extra, time.perf_counter() - t0)


def _comparability_instance(seed: int, F: Field, size: int, depth: int):
    """An incomparable set and a node incomparable to all of it."""
    X = random_incomparable(seed, size + 1, depth, F)
    members = list(X)
    return IncomparableSet(tuple(members[1:])), members[0]


def random_essential(rng: random.Random, F: Field, limits: FactorLimits = DEFAULT_LIMITS) -> EssentialVal:
    while True:
        f = random_poly(rng, F, 1, 3)
        for q, _ in bi_factor(f, limits) if f else []:
            if q.vanishes_at_origin():
                return EssentialVal(q)


def run_check(kind: str, seed: int, F: Field, size: int, depth: int, budget: int = 20,
              limits: FactorLimits = DEFAULT_LIMITS) -> CheckReport:
    if kind == "unique-essential":
        return check_unique_essential(random_incomparable(seed, size, depth, F), seed, budget, limits)
    if kind == "comparability":
        X, alpha = _comparability_instance(seed, F, size, depth)
        return check_comparability(X, alpha, seed, budget, limits=limits)
    if kind == "irredundance":
        return check_irredundance(random_incomparable(seed, size, depth, F), seed, budget=budget, limits=limits)
    if kind == "localization":
        X = random_incomparable(seed, size, depth, F)
        p = random_essential(random.Random(seed), F, limits)
        return check_localization(list(X), p, seed, budget=budget, limits=limits)
    raise ValueError(f"unknown check {kind!r}")


CHECKS = ("unique-essential", "comparability", "irredundance", "localization")
SUITES = ("approx", "prime-lemma") + CHECKS


def instance_shape(i: int, size: int, depth: int) -> tuple[int, int]:
    """Suites vary the set size over ``1..size`` (at least 2 where needed)."""
    return 1 + i % size, depth


def run_suite(name: str, F: Field, seed: int, count: int, size: int = 6, depth: int = 4,
              budget: int = 20, limits: FactorLimits = DEFAULT_LIMITS):
    """Yield one report per instance, in instance order."""
    for i in range(count):
        s = seed + i
        if name == "approx":
            yield run_approx(s, F)
        elif name == "prime-lemma":
            yield run_prime_lemma(s, F, depth, budget, limits)
        elif name in CHECKS:
            k, d = instance_shape(i, size, depth)
            if name == "comparability":
                k = min(k, leaf_capacity(F, d) - 1)
            if name == "irredundance":
                k = max(k, 2)
            yield run_check(name, s, F, k, d, budget, limits)
        else:
            raise ValueError(f"unknown suite {name!r}")


__all__ = [
    "CHECKS", "SUITES", "approx_instance", "random_essential", "random_form", "random_path",
    "random_poly", "run_approx", "run_check", "run_prime_lemma", "run_suite",
]
