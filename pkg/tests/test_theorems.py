import itertools

import pytest

from qtree.coeffs import GF
from qtree.errors import PreconditionError
from qtree.rlr import member
from qtree.suites import run_check, run_suite
from qtree.theorems import (
    IncomparableSet,
    check_comparability,
    check_irredundance,
    check_localization,
    check_unique_essential,
    find_witness,
    random_incomparable,
)

from conftest import ev, frac, path


def S(*texts, field=None):
    return IncomparableSet.parse(texts, field or GF(5))


def test_incomparable_set_guards():
    with pytest.raises(PreconditionError):
        S("[0]", "[0, 1]")
    with pytest.raises(PreconditionError):
        IncomparableSet(())
    assert len(S("[0]", "[0]", "[1]")) == 2


def test_random_incomparable():
    F = GF(5)
    X = random_incomparable(7, 3, 1, F)
    assert len(X) == 3 and all(len(m) == 1 for m in X)
    assert len(random_incomparable(7, 1, 4, GF(3))) == 1
    assert random_incomparable(9, 6, 3, F) == random_incomparable(9, 6, 3, F)
    # the whole antichain of leaves is reachable
    assert len(random_incomparable(1, 9, 2, GF(2))) == 9
    with pytest.raises(PreconditionError):
        random_incomparable(1, 7, 1, F)


def test_unique_essential_examples():
    rep = check_unique_essential(S("[0]", "[1]", "[inf]"))
    assert rep.status == "verified"
    assert rep.witnesses == {"[0]": "y", "[1]": "y - x", "[inf]": "x"}
    assert check_unique_essential(S("[2, inf]")).status == "verified"


def test_comparability_examples():
    rep = check_comparability(S("[1]"), path("[0]"))
    assert rep.status == "verified" and rep.witnesses == {"[0]": "y"}
    with pytest.raises(PreconditionError):
        check_comparability(S("[1]"), path("[1, 0]"))
    F3 = GF(3)
    rep = check_comparability(S("[1]", "[2]", "[inf]", field=F3), path("[0]", F3))
    assert rep.status == "verified"


def test_find_witness_hand_cases():
    assert find_witness(S("[0]", "[1]"), 0) == frac("x/y")
    assert find_witness(S("[0]", "[inf]"), 1) == frac("y/x")
    with pytest.raises(PreconditionError):
        find_witness(S("[0]"), 0)


def test_witnesses_separate_depth_one_nodes():
    nodes = ["[0]", "[1]", "[2]", "[3]", "[4]", "[inf]"]
    for a, b in itertools.combinations(nodes, 2):
        X = S(a, b)
        for i in (0, 1):
            w = find_witness(X, i)
            assert w is not None
            assert member(X.members[1 - i], w) and not member(X.members[i], w)


def test_localization_examples():
    assert check_localization([path("[0]")], ev("y")).status == "verified"
    rep = check_localization([path("[1]")], ev("y"))
    assert rep.status == "verified"
    w = frac(rep.witnesses["w"])
    assert member(path("[1]"), w)
    with pytest.raises(PreconditionError):
        check_localization([], ev("y"))


def test_report_json_is_reproducible():
    a = run_check("irredundance", 5, GF(5), 3, 3).to_json()
    b = run_check("irredundance", 5, GF(5), 3, 3).to_json()
    assert a == b and "elapsed" not in a
    assert '"schema_version": 1' in a


@pytest.mark.parametrize("name", ["comparability", "irredundance", "localization"])
def test_small_suites_have_no_counterexamples(name):
    for F in (GF(3), GF(5)):
        statuses = {r.status for r in run_suite(name, F, 100, 12, size=4, depth=3)}
        assert "counterexample" not in statuses
