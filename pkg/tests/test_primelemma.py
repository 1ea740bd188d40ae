import random

import pytest
from hypothesis import given, settings, strategies as st

from qtree.coeffs import GF
from qtree.errors import BudgetExceeded, PreconditionError
from qtree.primelemma import analyze, comparability_guarantee, descend, prime_lemma, seed_prime
from qtree.rlr import EssentialVal, contains, transform_elem
from qtree.suites import random_path

from conftest import P, ev, path


def test_seed_prime_examples():
    assert seed_prime(path("[]")).p == P("y")
    for text in ["[0]", "[0, inf]", "[inf, 2, 1]"]:
        b = path(text)
        assert contains(seed_prime(b), b)


def test_seed_prime_needs_finite_field():
    from qtree.coeffs import QQ
    with pytest.raises(PreconditionError):
        seed_prime(path("[0]", QQ))


def test_analyze_examples():
    seq = analyze(ev("y"), path("[0, 0]"))
    assert all(lv.prime_power for lv in seq.levels)
    assert seq.partial_sums == (0, 1, 2, 3) and seq.total == 3

    seq = analyze(ev("y^2 - x^3"), path("[0]"))
    assert str(seq.levels[0].initial) == "y^2" and seq.levels[0].prime_power

    seq = analyze(ev("y^2 - x^2 + x^3"), path("[1]"))
    assert not seq.levels[0].prime_power
    assert seq.failing_levels() == [0]

    with pytest.raises(PreconditionError):
        analyze(ev("y"), path("[1]"))


def test_cusp_chain_qualifies():
    seq = analyze(ev("y^2 - x^3"), path("[0, inf]"))
    assert seq.orders == [2, 1, 1]
    assert not seq.failing_levels()


@pytest.mark.parametrize("text", ["[0]", "[0, 0]", "[0, inf]", "[1, 1]", "[inf, 2, 3]"])
def test_prime_lemma_postconditions(text):
    b = path(text)
    res = prime_lemma(b)
    assert contains(res.v, b)
    assert not analyze(res.v, b).failing_levels()
    assert comparability_guarantee(res.v, b, len(b) + 1).ok


def test_prime_lemma_repairs_split_initial():
    # the seed for this node has a split initial form at level 0
    b = path("[inf, 1, 1]")
    res = prime_lemma(b, seed=0)
    assert res.trace[0].failing_levels() == [0]
    assert len(res.steps) == 1
    assert str(res.v) == "y^3 - y^2 + x"
    for step in res.steps:
        assert step.achieved_order is None or step.achieved_order >= step.target_order
        assert step.qualifying >= 1
    assert not res.trace[-1].failing_levels()


def test_repairs_go_from_deep_to_shallow():
    res = prime_lemma(path("[1, inf, 2, 1]"), seed=0)
    assert [s.level for s in res.steps] == [1, 0]
    assert contains(res.v, path("[1, inf, 2, 1]"))


def test_budget_is_enforced():
    with pytest.raises(BudgetExceeded):
        prime_lemma(path("[inf, 1, 1]"), budget=1)


def test_descend_returns_root_prime():
    b = path("[0, inf]")
    q = descend(b, P("y - x"))
    assert q == P("y^2 - x^3").normalize()
    # the exceptional line has no root prime behind it
    assert descend(b, P("y")) is None


def test_comparability_examples():
    F3 = GF(3)
    rep = comparability_guarantee(ev("y", F3), path("[0]", F3), 3)
    assert rep.ok and rep.contains_beta
    rep = comparability_guarantee(ev("y", F3), path("[0]", F3), 3, prune=False)
    assert rep.ok and rep.nodes_checked == 1 + 4 + 16 + 64
    rep = comparability_guarantee(ev("y"), path("[]"), 2)
    assert rep.ok
    rep = comparability_guarantee(ev("y"), path("[1]"), 1)
    assert not rep.ok and not rep.contains_beta


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_pruned_and_exhaustive_walks_agree(seed):
    rng = random.Random(seed)
    F = GF(3)
    b = random_path(rng, F, rng.randint(0, 2))
    v = prime_lemma(b, seed=seed).v
    a = comparability_guarantee(v, b, 3)
    e = comparability_guarantee(v, b, 3, prune=False)
    assert a.contained == e.contained and a.counterexamples == e.counterexamples


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from([3, 5]))
def test_prime_lemma_random(seed, p):
    rng = random.Random(seed)
    F = GF(p)
    b = random_path(rng, F, rng.randint(0, 4))
    res = prime_lemma(b, seed=seed)
    assert transform_elem(b, res.v.p).passes
    assert not analyze(res.v, b).failing_levels()
    assert comparability_guarantee(res.v, b, len(b) + 1).ok
    assert prime_lemma(b, seed=seed).v == res.v
