"""Finite checks on sets of pairwise incomparable nodes.

The intersection ring of a set of nodes is never built.  Everything is
tested element-wise: essential primes are compared with the nodes through
:func:`contains`, and separating elements ``q^a / p^b`` are found by a
bounded search and then re-verified with :func:`member`.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field as dc_field

from .coeffs import BiPoly, Field, bi_gcd
from .coeffs.factor import DEFAULT_LIMITS, FactorLimits
from .errors import PreconditionError
from .primelemma import prime_lemma
from .rlr import (
    INF,
    Direction,
    EssentialVal,
    Frac,
    QuadPath,
    chart,
    comparable,
    contains,
    essential_value,
    member,
)

SCHEMA_VERSION = 1

VERIFIED = "verified"
NOT_FOUND = "witness-not-found"
COUNTEREXAMPLE = "counterexample"


@dataclass(frozen=True)
class IncomparableSet:
    """Nonempty, duplicate-free nodes, no one a prefix of another."""

    members: tuple[QuadPath, ...]

    def __post_init__(self):
        seen = []
        for m in self.members:
            if m not in seen:
                seen.append(m)
        if not seen:
            raise PreconditionError("an incomparable set needs at least one member")
        fields = {m.field for m in seen}
        if len(fields) != 1:
            raise PreconditionError("members live over different fields")
        for i, a in enumerate(seen):
            for b in seen[i + 1:]:
                if comparable(a, b):
                    raise PreconditionError(f"{a} and {b} are comparable")
        object.__setattr__(self, "members", tuple(seen))

    @classmethod
    def parse(cls, texts, field: Field) -> "IncomparableSet":
        return cls(tuple(QuadPath.parse(t, field) for t in texts))

    @property
    def field(self) -> Field:
        return self.members[0].field

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)


@dataclass
class CheckReport:
    """Outcome of one check on one instance.

    ``field``, ``seed`` and ``members`` (plus ``extra`` inputs such as a
    target node or prime) are enough to rerun the check.  ``elapsed`` is
    left out of the JSON unless asked for, so reruns compare byte for byte.
    """

    kind: str
    field: str
    seed: int
    members: list[str]
    status: str
    witnesses: dict[str, str] = dc_field(default_factory=dict)
    extra: dict = dc_field(default_factory=dict)
    elapsed: float = 0.0

    def to_dict(self, timing: bool = False) -> dict:
        out = {
            "schema_version": SCHEMA_VERSION,
            "kind": self.kind,
            "field": self.field,
            "seed": self.seed,
            "members": self.members,
            "status": self.status,
            "witnesses": self.witnesses,
            "extra": self.extra,
        }
        if timing:
            out["elapsed"] = round(self.elapsed, 6)
        return out

    def to_json(self, timing: bool = False) -> str:
        return json.dumps(self.to_dict(timing), sort_keys=True)


def _report(kind, X, seed, status, witnesses=None, extra=None, t0=None) -> CheckReport:
    F = X[0].field if X else None
    return CheckReport(
        kind,
        str(F.p) if F and F.p else "Q",
        seed,
        [str(m) for m in X],
        status,
        witnesses or {},
        extra or {},
        time.perf_counter() - t0 if t0 is not None else 0.0,
    )


def leaf_capacity(field: Field, max_depth: int) -> int:
    """Largest incomparable set using nodes of level ``1..max_depth``."""
    return (field.p + 1) ** max_depth


def random_incomparable(seed: int, size: int, max_depth: int, field: Field) -> IncomparableSet:
    """Sample ``size`` pairwise incomparable nodes of level ``1..max_depth``.

    A node is accepted only if the level-``max_depth`` leaves left free
    still leave room for the members not yet drawn, so the draw never gets
    stuck.  Same seed, same set.
    """
    if size < 1:
        raise PreconditionError("size must be at least 1")
    if max_depth < 1:
        raise PreconditionError("max_depth must be at least 1")
    if not field.is_finite:
        raise PreconditionError("sampling needs a finite field")
    q = field.p + 1
    cap = leaf_capacity(field, max_depth)
    if size > cap:
        raise PreconditionError(f"at most {cap} incomparable nodes exist up to level {max_depth}")
    rng = random.Random(seed)
    chosen: list[QuadPath] = []
    free = cap
    while len(chosen) < size:
        depth = rng.randint(1, max_depth)
        dirs = tuple(INF if (c := rng.randrange(q)) == field.p else Direction(c) for _ in range(depth))
        node = QuadPath(field, dirs)
        if any(comparable(node, m) for m in chosen):
            continue
        used = q ** (max_depth - depth)
        if free - used < size - len(chosen) - 1:
            continue
        chosen.append(node)
        free -= used
    return IncomparableSet(tuple(chosen))


def _witness_prime(alpha: QuadPath, seed: int, budget: int, limits: FactorLimits) -> EssentialVal:
    return prime_lemma(alpha, seed=seed, budget=budget, limits=limits).v


def check_unique_essential(
    X: IncomparableSet, seed: int = 0, budget: int = 20, limits: FactorLimits = DEFAULT_LIMITS
) -> CheckReport:
    """For every member, a prime through it and through no other member."""
    t0 = time.perf_counter()
    members = list(X)
    witnesses, failures = {}, []
    for alpha in members:
        v = _witness_prime(alpha, seed, budget, limits)
        witnesses[str(alpha)] = str(v)
        if not contains(v, alpha):
            failures.append(f"{v} misses {alpha}")
        for beta in members:
            if beta != alpha and contains(v, beta):
                failures.append(f"{v} also contains {beta}")
    status = COUNTEREXAMPLE if failures else VERIFIED
    extra = {"failures": failures} if failures else {}
    return _report("unique-essential", members, seed, status, witnesses, extra, t0)


def check_comparability(
    X: IncomparableSet,
    alpha: QuadPath,
    seed: int = 0,
    budget: int = 20,
    bound: int = 6,
    limits: FactorLimits = DEFAULT_LIMITS,
) -> CheckReport:
    """An essential prime through ``alpha`` avoiding all of ``X``, then an element witness.

    The element ``w`` (if found) lies in every member of ``X`` and not in
    ``alpha``.  Not finding one is recorded in ``extra`` but does not change
    the status, which rests on the prime.
    """
    t0 = time.perf_counter()
    members = list(X)
    for m in members:
        if comparable(m, alpha):
            raise PreconditionError(f"{alpha} is comparable to member {m}")
    v = _witness_prime(alpha, seed, budget, limits)
    failures = []
    if not contains(v, alpha):
        failures.append(f"{v} misses {alpha}")
    failures += [f"{v} contains {b}" for b in members if contains(v, b)]
    witnesses = {str(alpha): str(v)}
    extra = {"alpha": str(alpha)}
    if not failures:
        w = find_witness(IncomparableSet(tuple(members) + (alpha,)), len(members), seed, bound, budget, limits)
        extra["element_witness"] = None if w is None else str(w)
    else:
        extra["failures"] = failures
    status = COUNTEREXAMPLE if failures else VERIFIED
    return _report("comparability", members, seed, status, witnesses, extra, t0)


class _Searcher:
    """Membership of ``q^a / p^b`` in fixed nodes, with charts computed once.

    Kept apart from :func:`member` so that every hit can be confirmed by
    code that shares nothing with the search beyond the charts.
    """

    def __init__(self, nodes):
        self.nodes = list(nodes)
        self._cache: dict = {}

    def _at(self, node: QuadPath, f: BiPoly) -> BiPoly:
        key = (node, f)
        if key not in self._cache:
            ch = chart(node)
            self._cache[key] = f.compose(ch.phi, ch.psi) if node.dirs else f
        return self._cache[key]

    def inside(self, node: QuadPath, q: BiPoly, a: int, p: BiPoly, b: int) -> bool:
        num, den = self._at(node, q) ** a, self._at(node, p) ** b
        g = bi_gcd(num, den)
        return not den.exact_div(g).vanishes_at_origin()


def _search(p: BiPoly, qs, keep, drop, bound: int) -> Frac | None:
    """First ``q^a / p^b`` inside every ``keep`` node and outside every ``drop`` node.

    Candidates run by ``a + b``, then by position of ``q``, then by ``a``.
    """
    s = _Searcher(list(keep) + list(drop))
    for total in range(2, 2 * bound + 1):
        for q in qs:
            for a in range(1, bound + 1):
                b = total - a
                if not 1 <= b <= bound:
                    continue
                if all(s.inside(n, q, a, p, b) for n in keep) and not any(
                    s.inside(n, q, a, p, b) for n in drop
                ):
                    return Frac(q**a, p**b)
    return None


def _candidate_numerators(F: Field, extra_primes, exclude: BiPoly):
    out = []
    for q in [BiPoly.x(F), BiPoly.y(F), *extra_primes]:
        q = q.normalize()
        if q != exclude and q not in out:
            out.append(q)
    return out


def find_witness(
    X: IncomparableSet,
    alpha_index: int,
    seed: int = 0,
    bound: int = 6,
    budget: int = 20,
    limits: FactorLimits = DEFAULT_LIMITS,
) -> Frac | None:
    """An element in every member but ``X[alpha_index]`` and not in that one.

    ``w = q^a / p^b`` with ``p`` the separating prime of the excluded node
    and ``q`` drawn from ``x``, ``y`` and the separating primes of the other
    members; ``a, b <= bound``.  Hits are re-checked with :func:`member`.
    """
    members = list(X)
    if len(members) < 2:
        raise PreconditionError("irredundance needs at least two members")
    if not 0 <= alpha_index < len(members):
        raise PreconditionError("alpha_index out of range")
    alpha = members[alpha_index]
    others = [m for i, m in enumerate(members) if i != alpha_index]
    F = X.field
    p = _witness_prime(alpha, seed, budget, limits).p
    qs = _candidate_numerators(F, (_witness_prime(b, seed, budget, limits).p for b in others), p)
    w = _search(p, qs, others, [alpha], bound)
    if w is not None and (not all(member(b, w) for b in others) or member(alpha, w)):
        raise AssertionError(f"search hit {w} fails independent membership check")
    return w


def check_irredundance(
    X: IncomparableSet, seed: int = 0, bound: int = 6, budget: int = 20, limits: FactorLimits = DEFAULT_LIMITS
) -> CheckReport:
    """:func:`find_witness` for every member; ``witness-not-found`` if any search fails."""
    t0 = time.perf_counter()
    members = list(X)
    if len(members) < 2:
        return _report("irredundance", members, seed, VERIFIED, {}, {"vacuous": True}, t0)
    witnesses, missing = {}, []
    for i, alpha in enumerate(members):
        w = find_witness(X, i, seed, bound, budget, limits)
        if w is None:
            missing.append(str(alpha))
        else:
            witnesses[str(alpha)] = str(w)
    status = NOT_FOUND if missing else VERIFIED
    return _report("irredundance", members, seed, status, witnesses, {"missing": missing} if missing else {}, t0)


def check_localization(
    X, p: EssentialVal, seed: int = 0, bound: int = 6, budget: int = 20, limits: FactorLimits = DEFAULT_LIMITS
) -> CheckReport:
    """Either some member lies in ``D_(p)``, or an element of every member has negative ``p``-value.

    The second branch is a bounded search; failing it is ``witness-not-found``.
    """
    t0 = time.perf_counter()
    members = list(dict.fromkeys(X))
    if not members:
        raise PreconditionError("localization check needs at least one node")
    extra = {"prime": str(p)}
    inside = [m for m in members if contains(p, m)]
    if inside:
        extra["contained_in"] = str(inside[0])
        return _report("localization", members, seed, VERIFIED, {}, extra, t0)
    F = p.field
    qs = _candidate_numerators(F, (_witness_prime(m, seed, budget, limits).p for m in members), p.p)
    w = _search(p.p, qs, members, [], bound)
    if w is None:
        return _report("localization", members, seed, NOT_FOUND, {}, extra, t0)
    if not all(member(m, w) for m in members) or essential_value(p, w) >= 0:
        extra["failures"] = [f"{w} fails independent re-check"]
        return _report("localization", members, seed, COUNTEREXAMPLE, {"w": str(w)}, extra, t0)
    return _report("localization", members, seed, VERIFIED, {"w": str(w)}, extra, t0)
