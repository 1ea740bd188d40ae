"""An essential valuation through a node that sees no other branch of the tree.

For a node ``beta`` reached by ``D = alpha_0 < alpha_1 < ... < alpha_n = beta``
we look for an irreducible ``p`` whose strict transforms pass through the
whole chain and whose initial form at every level ``i < n`` is a power of a
single homogeneous prime.  Such a ``p`` cannot contain any node off the
chain, so every node contained in ``D_(p)`` is comparable to ``beta``.

The search starts from a smooth curve through ``beta`` and repairs the
deepest level whose initial form splits: the transform there is lifted to
``g*h`` with ``in(g)`` the power of the direction towards ``beta`` and the
error pushed to order ``m - s_k``; an irreducible factor of ``g`` replaces
the working prime.  Deeper levels stay fixed, so the loop ends.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field

from .approx import lift_factorization
from .coeffs import BiPoly, HForm, bi_factor, hform_factor
from .coeffs.factor import DEFAULT_LIMITS, FactorLimits
from .errors import BudgetExceeded, InternalError, PreconditionError
from .rlr import (
    EssentialVal,
    QuadPath,
    comparable,
    contains,
    pullback,
    step,
    transform_elem,
)


@dataclass(frozen=True)
class Level:
    p: BiPoly
    r: int
    initial: HForm
    prime_power: bool


@dataclass(frozen=True)
class TransformSequence:
    """Transforms of the working prime along the chain to ``beta``.

    ``partial_sums[k]`` is ``r_0 + ... + r_{k-1}``; ``total`` is the sum of
    all ``r_i`` for ``i = 0..n``.
    """

    levels: tuple[Level, ...]
    partial_sums: tuple[int, ...]

    @property
    def total(self) -> int:
        return self.partial_sums[-1]

    @property
    def orders(self) -> list[int]:
        return [lv.r for lv in self.levels]

    def failing_levels(self) -> list[int]:
        """Levels ``i < n`` whose initial form is not a prime power."""
        return [i for i, lv in enumerate(self.levels[:-1]) if not lv.prime_power]


def analyze(v: EssentialVal, beta: QuadPath) -> TransformSequence:
    t = transform_elem(beta, v.p)
    if not t.passes:
        raise PreconditionError(f"{v} does not pass through {beta}")
    levels = []
    for q, r in t.levels:
        init = HForm.from_bipoly(q.homogeneous_part(r)).normalize()
        levels.append(Level(q, r, init, len(hform_factor(init)) == 1))
    sums = [0]
    for lv in levels:
        sums.append(sums[-1] + lv.r)
    return TransformSequence(tuple(levels), tuple(sums))


def _through(q: BiPoly, beta: QuadPath) -> bool:
    return q.vanishes_at_origin() and transform_elem(beta, q).passes


def descend(node: QuadPath, pi: BiPoly, limits: FactorLimits = DEFAULT_LIMITS) -> BiPoly | None:
    """The prime of the root ring whose strict transform at ``node`` is ``pi``.

    ``pi`` is irreducible in node coordinates.  Returns ``None`` when ``pi``
    is exceptional (no prime of the root ring has it as strict transform).
    """
    if not node.dirs:
        return pi.normalize()
    num = pullback(node, pi).num
    target = pi.normalize()
    for q, _ in bi_factor(num, limits):
        if not q.vanishes_at_origin():
            continue
        t = transform_elem(node, q)
        if t.passes and t.levels[-1][0].normalize() == target:
            return q
    return None


def _seed_candidates(beta: QuadPath, rng: random.Random):
    """``T``, then ``T - a*E^e`` for ``e = 2, 3, ...`` in node coordinates.

    ``E`` is the exceptional coordinate of the last blow-up and ``T`` the
    other one, so every candidate is a smooth curve through the node that
    is not the exceptional line.
    """
    F = beta.field
    x, y = BiPoly.x(F), BiPoly.y(F)
    T, E = (x, y) if beta.dirs and beta.dirs[-1].is_infinite else (y, x)
    yield T
    e = 2
    while True:
        yield T - E**e
        if F.is_finite and F.p > 2:
            yield T - E**e * rng.randrange(2, F.p)
        e += 1


def seed_prime(
    beta: QuadPath, seed: int = 0, retries: int = 12, limits: FactorLimits = DEFAULT_LIMITS
) -> EssentialVal:
    """An essential valuation of the root ring whose transform passes through ``beta``."""
    if not beta.field.is_finite:
        raise PreconditionError("seed_prime needs a finite field")
    rng = random.Random(seed)
    for attempt, cand in enumerate(_seed_candidates(beta, rng)):
        if attempt >= retries:
            break
        num = pullback(beta, cand).num
        if num.total_degree() > limits.degree_cap:
            continue
        for q, _ in bi_factor(num, limits):
            if _through(q, beta):
                return EssentialVal(q)
    raise BudgetExceeded(f"no seed prime through {beta} within {retries} candidates")


@dataclass(frozen=True)
class LiftStep:
    """One repair: lifting at ``level`` and the factor that was kept."""

    level: int
    G: HForm
    H: HForm
    target_order: int
    achieved_order: int | None
    g: BiPoly
    chosen: BiPoly
    qualifying: int


@dataclass(frozen=True)
class PrimeLemmaResult:
    v: EssentialVal
    trace: tuple[TransformSequence, ...]
    steps: tuple[LiftStep, ...] = dc_field(default=())


def _repair(beta: QuadPath, seq: TransformSequence, k: int, limits: FactorLimits) -> tuple[BiPoly, LiftStep]:
    F = beta.field
    lv = seq.levels[k]
    direction = beta.dirs[k].form(F)
    init = HForm.from_bipoly(lv.p.homogeneous_part(lv.r))
    t = dict(hform_factor(init)).get(direction, 0)
    if t == 0:
        raise InternalError(f"level {k} initial form misses the direction towards beta")
    G = direction**t
    H = init.exact_div(G)
    target = seq.total - seq.partial_sums[k]
    lift = lift_factorization(lv.p, G, H, target)
    if lift.achieved_order is not None and lift.achieved_order < target:
        raise InternalError("lifting error term below m - s_k")
    node = beta[:k]
    found = []
    for pi, _ in bi_factor(lift.g, limits):
        if not pi.vanishes_at_origin():
            continue
        q = descend(node, pi, limits)
        if q is not None and _through(q, beta) and q not in found:
            found.append(q)
    if not found:
        raise InternalError(f"no factor of the lift at level {k} passes through {beta}")
    step_info = LiftStep(k, G, H, target, lift.achieved_order, lift.g, found[0], len(found))
    return found[0], step_info


def prime_lemma(
    beta: QuadPath,
    seed: int = 0,
    budget: int = 20,
    limits: FactorLimits = DEFAULT_LIMITS,
) -> PrimeLemmaResult:
    """Essential ``v`` through ``beta`` with prime-power initial forms below ``beta``."""
    v = seed_prime(beta, seed, limits=limits)
    trace = []
    steps = []
    for _ in range(budget):
        seq = analyze(v, beta)
        trace.append(seq)
        failing = seq.failing_levels()
        if not failing:
            return PrimeLemmaResult(v, tuple(trace), tuple(steps))
        q, info = _repair(beta, seq, max(failing), limits)
        steps.append(info)
        v = EssentialVal(q)
    raise BudgetExceeded(f"no prime with prime-power initials through {beta} within {budget} rounds")


@dataclass(frozen=True)
class ComparabilityReport:
    """Nodes up to ``depth`` contained in ``D_(p)`` and not comparable to ``beta``."""

    counterexamples: tuple[QuadPath, ...]
    contained: tuple[QuadPath, ...]
    nodes_checked: int
    contains_beta: bool

    @property
    def ok(self) -> bool:
        return not self.counterexamples


def comparability_guarantee(
    v: EssentialVal, beta: QuadPath, depth: int, *, prune: bool = True
) -> ComparabilityReport:
    """Check every rational node of level ``<= depth``.

    Strict transforms are carried down the tree one blow-up at a time.  With
    ``prune`` the children of nodes not contained in ``D_(p)`` are skipped;
    those children cannot be contained either, since the rings grow along
    each chain.
    """
    F = beta.field
    if not F.is_finite:
        raise PreconditionError("enumeration needs a finite field")
    dirs = [d for d in (QuadPath(F, (c,)).dirs[0] for c in F.elements())]
    dirs.append(QuadPath.parse("[inf]", F).dirs[0])
    bad, inside = [], []
    checked = 0
    stack = [(QuadPath.root(F), v.p)]
    while stack:
        node, q = stack.pop()
        checked += 1
        here = q.vanishes_at_origin()
        if here:
            inside.append(node)
            if not comparable(node, beta):
                bad.append(node)
        if len(node) < depth and (here or not prune):
            r = q.ord()
            for d in reversed(dirs):
                stack.append((node.child(d), step(q, d, r)))
    key = QuadPath.sort_key
    return ComparabilityReport(
        tuple(sorted(bad, key=key)), tuple(sorted(inside, key=key)), checked, contains(v, beta)
    )
