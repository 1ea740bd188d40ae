"""Charts, order valuations, transforms and membership on the rational tree.

Every node reached through rational directions is the localization of a
polynomial ring ``k[x_n, y_n]`` at its origin, where the node coordinates
are related to the root ones by a composite of the one-step charts

* ``Finite(c)``: ``x <- x',  y <- x' * (y' + c)``  (exceptional element ``x'``)
* ``Infinity``:  ``x <- x' * y',  y <- y'``        (exceptional element ``y'``)

so membership, orders and initial forms reduce to polynomial arithmetic in
node coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from ..coeffs import BiPoly, Field, HForm, bi_gcd, bi_irreducible, hform_factor
from ..coeffs.factor import DEFAULT_LIMITS, FactorLimits
from ..errors import InternalError, PreconditionError
from .frac import Frac
from .path import INF, Direction, NonRational, QuadPath


def step(f: BiPoly, d: Direction, divide: int = 0) -> BiPoly:
    """Rewrite ``f`` in the chart of one blow-up along ``d``.

    With ``divide = r`` the result is divided by the ``r``-th power of the
    exceptional element; the division is checked to be exact.
    """
    F = f.field
    out: dict = {}
    if d.c is None:
        for (i, j), c in f.terms.items():
            e = i + j - divide
            if e < 0:
                raise InternalError("chart division is not exact")
            out[(i, e)] = c
        return BiPoly._raw(F, out)
    cval = F(d.c)
    red = F.reduce
    for (i, j), c in f.terms.items():
        e = i + j - divide
        if e < 0:
            raise InternalError("chart division is not exact")
        if cval == 0:
            key = (e, j)
            out[key] = out.get(key, 0) + c
            continue
        # (y + c)^j expanded binomially
        for k in range(j + 1):
            key = (e, k)
            out[key] = out.get(key, 0) + c * comb(j, k) * cval ** (j - k)
    terms = {}
    for key, v in out.items():
        v = red(v)
        if v:
            terms[key] = v
    return BiPoly._raw(F, terms)


def exceptional_variable(d: Direction, field: Field) -> BiPoly:
    """The element generating ``m_i`` in the next chart (``x'`` or ``y'``)."""
    return BiPoly.y(field) if d.is_infinite else BiPoly.x(field)


@dataclass(frozen=True)
class NodeChart:
    """Root coordinates written in the coordinates of the node.

    ``phi``, ``psi`` express ``x``, ``y``; ``exceptional[i]`` is the level-i
    generator of ``m_i * alpha_{i+1}`` written in node coordinates.
    """

    path: QuadPath
    phi: BiPoly
    psi: BiPoly
    exceptional: tuple[BiPoly, ...]

    @property
    def level(self) -> int:
        return len(self.path)


def _chart_uncached(path: QuadPath) -> NodeChart:
    F = path.field
    phi, psi = BiPoly.x(F), BiPoly.y(F)
    exc: list[BiPoly] = []
    for d in path:
        phi, psi = step(phi, d), step(psi, d)
        exc = [step(e, d) for e in exc]
        exc.append(exceptional_variable(d, F))
    return NodeChart(path, phi, psi, tuple(exc))


_chart_cached = lru_cache(maxsize=8192)(_chart_uncached)


def chart(path: QuadPath, *, cache: bool = True) -> NodeChart:
    """Composite chart of the node; memoized (``cache=False`` recomputes)."""
    return _chart_cached(path) if cache else _chart_uncached(path)


@lru_cache(maxsize=8192)
def node_coordinates(path: QuadPath) -> tuple[Frac, Frac]:
    """The node coordinates ``(x_n, y_n)`` as elements of ``k(x, y)``."""
    F = path.field
    xn, yn = Frac(BiPoly.x(F)), Frac(BiPoly.y(F))
    for d in path:
        if d.is_infinite:
            xn = xn / yn
        else:
            xn, yn = xn, yn / xn - F(d.c)
    return xn, yn


def pullback(path: QuadPath, f: BiPoly) -> Frac:
    """``f(x_n, y_n)`` for ``f`` given in node coordinates, as an element of ``k(x, y)``."""
    xn, yn = node_coordinates(path)
    F = path.field
    out = Frac(BiPoly.zero(F))
    for (i, j), c in f.terms.items():
        out = out + (xn**i) * (yn**j) * c
    return out


def comparable(a: QuadPath, b: QuadPath) -> bool:
    """Rings on a common chain: one path is a prefix of the other."""
    return a.is_prefix_of(b) or b.is_prefix_of(a)


def to_node(path: QuadPath, w) -> Frac:
    """Rewrite an element of ``k(x, y)`` in the node's coordinates."""
    w = Frac.of(w, path.field)
    path.field.check(w.field)
    if not path.dirs:
        return w
    ch = chart(path)
    num = w.num.compose(ch.phi, ch.psi)
    den = w.den.compose(ch.phi, ch.psi)
    return Frac(num, den)


def ord_at(path: QuadPath, w) -> int:
    """Order valuation of the node applied to ``w``."""
    w = Frac.of(w, path.field)
    if not w:
        raise PreconditionError("order of zero")
    v = to_node(path, w)
    return v.num.ord() - v.den.ord()


def initial_form(path: QuadPath, f: BiPoly) -> HForm:
    """Lowest-degree homogeneous part of ``f`` (node coordinates), normalized."""
    if not f:
        raise PreconditionError("initial form of zero")
    return HForm.from_bipoly(f.homogeneous_part(f.ord())).normalize()


def member(path: QuadPath, w) -> bool:
    """``w`` lies in the node ring: its reduced denominator is a unit there."""
    v = to_node(path, w)
    return not v.den.vanishes_at_origin()


@dataclass(frozen=True)
class ElementTransform:
    """Successive transforms ``p_i`` with ``r_i = ord_i(p_i)`` for ``i = 0..n``."""

    levels: tuple[tuple[BiPoly, int], ...]
    passes: bool

    @property
    def transforms(self) -> list[BiPoly]:
        return [p for p, _ in self.levels]

    @property
    def orders(self) -> list[int]:
        return [r for _, r in self.levels]


def transform_elem(path: QuadPath, p: BiPoly) -> ElementTransform:
    """Strict transforms of ``p`` along the chain from the root to ``path``."""
    if not p:
        raise PreconditionError("transform of zero")
    path.field.check(p.field)
    levels = []
    cur = p
    for d in path:
        r = cur.ord()
        levels.append((cur, r))
        cur = step(cur, d, r)
    levels.append((cur, cur.ord()))
    passes = all(q.vanishes_at_origin() for q, _ in levels)
    return ElementTransform(tuple(levels), passes)


def directions_of(path: QuadPath, f: BiPoly) -> list[tuple[HForm, int, Direction | NonRational]]:
    """Tangent directions of ``f`` (node coordinates) with multiplicities."""
    if not f or not f.vanishes_at_origin():
        raise PreconditionError("directions need a nonzero element of the maximal ideal")
    out = []
    for g, m in hform_factor(initial_form(path, f)):
        if g.degree == 1:
            a, b = g.coeffs
            d = INF if b == 0 else Direction(f.field.reduce(-a))
            out.append((g, m, d))
        else:
            out.append((g, m, NonRational(g.degree)))
    return out


@dataclass(frozen=True)
class EssentialVal:
    """The localization of the root ring at the height-one prime ``(p)``."""

    p: BiPoly

    def __post_init__(self):
        object.__setattr__(self, "p", self.p.normalize())

    @classmethod
    def checked(cls, p: BiPoly, limits: FactorLimits = DEFAULT_LIMITS) -> "EssentialVal":
        """Validate irreducibility and passage through the origin."""
        if not p or not p.vanishes_at_origin():
            raise PreconditionError(f"{p} does not vanish at the origin")
        if not bi_irreducible(p, limits):
            raise PreconditionError(f"{p} is not irreducible")
        return cls(p)

    @property
    def field(self) -> Field:
        return self.p.field

    def __str__(self):
        return str(self.p)


def _multiplicity(p: BiPoly, f: BiPoly) -> int:
    m = 0
    while True:
        q, r = f.divmod(p)
        if r:
            return m
        f, m = q, m + 1


def essential_value(v: EssentialVal, w) -> int:
    """Exponent of ``p`` in ``w``."""
    w = Frac.of(w, v.field)
    if not w:
        raise PreconditionError("valuation of zero")
    return _multiplicity(v.p, w.num) - _multiplicity(v.p, w.den)


def contains(v: EssentialVal, path: QuadPath) -> bool:
    """The node ring lies in ``D_(p)``: the strict transform of ``p`` passes through it."""
    return transform_elem(path, v.p).passes


def exceptional_in_node(path: QuadPath) -> list[BiPoly]:
    """Level generators ``x_i`` pulled to ``k(x, y)`` and rewritten at the node."""
    F = path.field
    out = []
    for i, d in enumerate(path):
        xi, yi = node_coordinates(path[:i])
        e = to_node(path, yi if d.is_infinite else xi)
        if not e.is_polynomial():
            raise InternalError("exceptional element is not regular at the node")
        out.append(e.num * F.inv(e.den.constant_term()))
    return out


def contains_by_valuation(v: EssentialVal, path: QuadPath) -> bool:
    """Independent route to :func:`contains`.

    The node coordinates, pulled back to ``k(x, y)``, must have nonnegative
    ``p``-adic value, and the total transform of ``p`` (one composite
    substitution), stripped of every factor shared with an exceptional
    element, must vanish at the node origin.
    """
    xn, yn = node_coordinates(path)
    if essential_value(v, xn) < 0 or essential_value(v, yn) < 0:
        return False
    ch = chart(path)
    rest = v.p.compose(ch.phi, ch.psi)
    for e in exceptional_in_node(path):
        while True:
            g = bi_gcd(rest, e)
            if g.is_constant():
                break
            rest = rest.exact_div(g)
    return rest.vanishes_at_origin()


def children(path: QuadPath, directions=None) -> list[QuadPath]:
    """All rational first-neighbourhood points: ``Finite(c)`` for each ``c``, then ``Infinity``."""
    if directions is None:
        if not path.field.is_finite:
            raise PreconditionError("children over an infinite field need explicit directions")
        directions = [Direction(c) for c in path.field.elements()] + [INF]
    return [path.child(d) for d in directions]


def follow_branch(p: BiPoly, depth: int) -> tuple[QuadPath, list[int]]:
    """Walk ``depth`` blow-ups along the tangent of a unibranch ``p``.

    Returns the path and the orders ``r_0..r_depth`` of the successive
    strict transforms.  Fails if a transform has several tangents or a
    non-rational one.
    """
    if not p or not p.vanishes_at_origin():
        raise PreconditionError("the branch must pass through the origin")
    node = QuadPath.root(p.field)
    cur, orders = p, []
    for _ in range(depth):
        r = cur.ord()
        orders.append(r)
        dirs = directions_of(node, cur)
        if len(dirs) != 1 or isinstance(dirs[0][2], NonRational):
            raise PreconditionError(f"{cur} has no single rational tangent at {node}")
        d = dirs[0][2]
        node, cur = node.child(d), step(cur, d, r)
    orders.append(cur.ord())
    return node, orders
