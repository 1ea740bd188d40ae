"""Factorization over prime fields.

Univariate factoring is delegated to SymPy's dense Galois-field routines.
Bivariate factoring reduces to one variable by evaluating at a point of a
line ``x = a``, lifts the univariate factorization ``x``-adically with a
linear Hensel step and recombines lifted factors by trial division.  When
no point of F_p gives a squarefree specialization (tiny fields, strange
curves) the variables are swapped or sheared; as a last resort divisors
are searched exhaustively under :attr:`FactorLimits.exhaustive_limit`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import combinations, product

import sympy
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_factor

from ..errors import BudgetExceeded, InternalError, PreconditionError, UnsupportedField
from .bipoly import BiPoly, term_key
from .field import Field
from .gcd import bi_gcd
from .hform import HForm
from .unipoly import UniPoly, uni_gcd, uni_gcdex


@dataclass(frozen=True)
class FactorLimits:
    degree_cap: int = 32
    exhaustive_limit: int = 200_000
    eval_points: int = 12


DEFAULT_LIMITS = FactorLimits()


def _require_prime_field(field: Field) -> None:
    if not field.is_finite:
        raise UnsupportedField("factorization is only available over F_p")


# -- univariate --------------------------------------------------------------


def uni_factor(f: UniPoly) -> list[tuple[UniPoly, int]]:
    """Monic irreducible factors of ``f`` with multiplicities.

    Sorted by degree, then by coefficient tuple.
    """
    _require_prime_field(f.field)
    if f.degree < 1:
        raise PreconditionError("cannot factor a constant")
    p = f.field.p
    _, facs = gf_factor([int(c) for c in reversed(f.coeffs)], p, ZZ)
    out = [(UniPoly(f.field, [int(c) for c in reversed(g)]), int(m)) for g, m in facs]
    out.sort(key=lambda t: (t[0].degree, t[0].coeffs))
    return out


def _uni_squarefree(u: UniPoly) -> bool:
    d = u.derivative()
    return bool(d) and uni_gcd(u, d).degree == 0


def _uni_factor_count(u: UniPoly) -> int:
    return sum(1 for _ in uni_factor(u))


# -- binary forms ------------------------------------------------------------


def _rational_linear_factors(u: UniPoly) -> list[tuple[UniPoly, int]]:
    t = sympy.Symbol("t")
    poly = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(u.coeffs)], t, domain="QQ")
    _, facs = poly.factor_list()
    out = []
    for g, m in facs:
        if g.degree() != 1:
            raise UnsupportedField(f"form needs an irrational factorization over Q ({g.as_expr()})")
        a, b = (Fraction(int(c.p), int(c.q)) for c in g.all_coeffs())
        out.append((UniPoly(u.field, [b / a, 1]), int(m)))
    out.sort(key=lambda t: (t[0].degree, t[0].coeffs))
    return out


def hform_factor(F: HForm) -> list[tuple[HForm, int]]:
    """Irreducible factors of a binary form, each normalized, with multiplicity.

    The power of ``X`` is split off first; the rest is dehomogenized in
    ``t = Y/X`` and factored in one variable.
    """
    if F.is_zero():
        raise PreconditionError("cannot factor the zero form")
    field = F.field
    m = F.x_power()
    out = []
    if m:
        out.append((HForm.X(field), m))
    rest = HForm(field, F.coeffs[: F.degree - m + 1])
    if rest.degree > 0:
        u = rest.dehomogenize()
        facs = uni_factor(u) if field.is_finite else _rational_linear_factors(u)
        for w, e in facs:
            out.append((HForm.from_dehomogenized(w), e))
    out.sort(key=lambda t: t[0].sort_key())
    return out


# -- bivariate ---------------------------------------------------------------


def _check_bi(f: BiPoly, limits: FactorLimits) -> None:
    _require_prime_field(f.field)
    if not f:
        raise PreconditionError("cannot factor the zero polynomial")
    if f.total_degree() > limits.degree_cap:
        raise BudgetExceeded(f"total degree {f.total_degree()} exceeds the cap {limits.degree_cap}")


def _pth_root(f: BiPoly) -> BiPoly:
    p = f.field.p
    # Frobenius is the identity on F_p, so only exponents change
    return BiPoly._raw(f.field, {(i // p, j // p): c for (i, j), c in f.terms.items()})


def _squarefree_pieces(f: BiPoly) -> list[BiPoly]:
    """Squarefree polynomials whose irreducible factors are exactly those of ``f``."""
    if f.is_constant():
        return []
    fy, fx = f.diff_y(), f.diff_x()
    if not fx and not fy:
        return _squarefree_pieces(_pth_root(f))
    for d in (fy, fx):
        if not d:
            continue
        g = bi_gcd(f, d)
        if g.total_degree() < f.total_degree():
            return [f.exact_div(g)] + _squarefree_pieces(g)
    raise InternalError("squarefree decomposition made no progress")


def _x_poly(u: UniPoly) -> BiPoly:
    return BiPoly(u.field, {(i, 0): c for i, c in enumerate(u.coeffs) if c})


def _content_x(f: BiPoly) -> UniPoly:
    cs = f.y_coeffs()
    return reduce(uni_gcd, cs[1:], cs[0].monic())


def _factor_squarefree(f: BiPoly, limits: FactorLimits, transforms: bool = True) -> list[BiPoly]:
    if f.is_constant():
        return []
    out = []
    cont = _content_x(f)
    if cont.degree > 0:
        out += [_x_poly(w) for w, _ in uni_factor(cont)]
        f = f.exact_div(_x_poly(cont))
    if f.deg_y() == 1:
        out.append(f.normalize())
    elif f.deg_y() > 1:
        out += _factor_primitive(f, limits, transforms)
    return out


def _eval_x(f: BiPoly, a) -> UniPoly:
    """``f(a, y)`` as a polynomial in ``y``."""
    F = f.field
    cs = [0] * (f.deg_y() + 1)
    for (i, j), c in f.terms.items():
        cs[j] += c * pow(a, i, F.p)
    return UniPoly(F, cs)


def _good_point(f: BiPoly, limits: FactorLimits):
    """Evaluation point with squarefree specialization and fewest factors."""
    F = f.field
    lc = f.y_coeffs()[-1]
    best = None
    tried = 0
    for a in F.elements():
        if lc(a) == 0:
            continue
        u = _eval_x(f, a)
        if u.degree != f.deg_y() or not _uni_squarefree(u):
            continue
        r = _uni_factor_count(u)
        if best is None or r < best[1]:
            best = (a, r, u)
        tried += 1
        if r == 1 or tried >= limits.eval_points:
            break
    return best


def _factor_primitive(f: BiPoly, limits: FactorLimits, transforms: bool) -> list[BiPoly]:
    """Irreducible factors of a squarefree, y-primitive ``f`` with deg_y >= 2."""
    best = _good_point(f, limits)
    if best is None:
        if transforms:
            return _factor_transformed(f, limits)
        return _exhaustive_factor(f, limits)
    a, r, _ = best
    if r == 1:
        return [f.normalize()]
    g = f.subs_x_shift(a)
    found = _hensel_recombine(g, limits)
    return [h.subs_x_shift(-a).normalize() for h in found]


def _factor_transformed(f: BiPoly, limits: FactorLimits) -> list[BiPoly]:
    F = f.field
    if _good_point(f.swap(), limits) is not None:
        return [h.swap().normalize() for h in _factor_squarefree(f.swap(), limits, transforms=False)]
    for c in range(1, F.p):
        g = f.shear(c)
        if _good_point(g, limits) is not None:
            return [h.shear(-c).normalize() for h in _factor_squarefree(g, limits, transforms=False)]
    return _exhaustive_factor(f, limits)


# x-adic series of polynomials in y: list index = power of x


def _series(f: BiPoly, K: int) -> list[UniPoly]:
    F = f.field
    dy = f.deg_y()
    rows = [[0] * (dy + 1) for _ in range(K)]
    for (i, j), c in f.terms.items():
        if i < K:
            rows[i][j] = c
    return [UniPoly(F, r) for r in rows]


def _scalar_series_inverse(L: UniPoly, K: int) -> list:
    F = L.field
    c = list(L.coeffs) + [0] * K
    inv0 = F.inv(c[0])
    out = [inv0]
    for k in range(1, K):
        s = sum(c[i] * out[k - i] for i in range(1, k + 1))
        out.append(F.reduce(-s * inv0))
    return out


def _hensel_pair(T: list[UniPoly], g0: UniPoly, h0: UniPoly, K: int):
    F = g0.field
    s, t, g = uni_gcdex(g0, h0)
    if g.degree != 0:
        raise InternalError("Hensel lifting of non-coprime factors")
    zero = UniPoly(F)
    gs = [g0] + [zero] * (K - 1)
    hs = [h0] + [zero] * (K - 1)
    for k in range(1, K):
        e = T[k]
        for i in range(1, k):
            if gs[i] and hs[k - i]:
                e = e - gs[i] * hs[k - i]
        if not e:
            continue
        gs[k] = (t * e) % g0
        hs[k] = (s * e) % h0
    return gs, hs


def _hensel_lift(T: list[UniPoly], factors: list[UniPoly], K: int) -> list[list[UniPoly]]:
    if len(factors) == 1:
        return [T]
    g0 = factors[0]
    h0 = reduce(lambda a, b: a * b, factors[1:])
    gs, hs = _hensel_pair(T, g0, h0, K)
    return [gs] + _hensel_lift(hs, factors[1:], K)


def _series_mul(a: list, b: list, K: int) -> list:
    F = a[0].field
    out = [UniPoly(F)] * K
    for i, u in enumerate(a):
        if not u:
            continue
        for j in range(K - i):
            if b[j]:
                out[i + j] = out[i + j] + u * b[j]
    return out


def _hensel_recombine(g: BiPoly, limits: FactorLimits) -> list[BiPoly]:
    F = g.field
    L = g.y_coeffs()[-1]
    K = L.degree + g.deg_x() + 1
    Linv = _scalar_series_inverse(L, K)
    G = _series(g, K)
    T = [UniPoly(F)] * K
    for i, c in enumerate(Linv):
        if c == 0:
            continue
        for l in range(K - i):
            if G[l]:
                T[i + l] = T[i + l] + G[l] * c
    mods = [w for w, _ in uni_factor(T[0])]
    lifted = _hensel_lift(T, mods, K)

    found = []
    cur = g
    remaining = list(range(len(lifted)))
    size = 1
    while 2 * size <= len(remaining):
        hit = None
        for S in combinations(remaining, size):
            Lc = cur.y_coeffs()[-1]
            lc_coeffs = list(Lc.coeffs[:K])
            prod_series = [UniPoly(F, [c]) for c in lc_coeffs + [0] * (K - len(lc_coeffs))]
            for idx in S:
                prod_series = _series_mul(prod_series, lifted[idx], K)
            cand = BiPoly(F, {(i, j): c for i, u in enumerate(prod_series) for j, c in enumerate(u.coeffs) if c})
            cont = _content_x(cand)
            if cont.degree > 0:
                cand = cand.exact_div(_x_poly(cont))
            q, r = cur.divmod(cand)
            if not r:
                hit = S
                found.append(cand)
                cur = q
                break
        if hit is None:
            size += 1
        else:
            remaining = [i for i in remaining if i not in hit]
    if not cur.is_constant():
        found.append(cur)
    return found


def _exhaustive_factor(f: BiPoly, limits: FactorLimits) -> list[BiPoly]:
    """Smallest-degree divisor search; a smallest divisor is irreducible."""
    F = f.field
    n = f.total_degree()
    budget = limits.exhaustive_limit
    for d in range(1, n // 2 + 1):
        monos = sorted(((i, k - i) for k in range(d + 1) for i in range(k + 1)), key=term_key)
        for lead_pos in range(len(monos)):
            lead = monos[lead_pos]
            if lead[0] + lead[1] != d:
                continue
            lower = monos[:lead_pos]
            budget -= F.p ** len(lower)
            if budget < 0:
                raise BudgetExceeded("exhaustive factor search exceeded its budget")
            for cs in product(range(F.p), repeat=len(lower)):
                terms = {lead: 1}
                terms.update({m: c for m, c in zip(lower, cs) if c})
                cand = BiPoly._raw(F, terms)
                q, r = f.divmod(cand)
                if not r:
                    return [cand.normalize()] + _factor_squarefree(q, limits, transforms=False)
    return [f.normalize()]


def bi_factor(f: BiPoly, limits: FactorLimits = DEFAULT_LIMITS) -> list[tuple[BiPoly, int]]:
    """Irreducible factors of ``f`` in ``F_p[x, y]`` with multiplicities.

    Factors are normalized (leading coefficient 1) and sorted by
    :meth:`BiPoly.sort_key`; their product equals ``f`` up to a scalar.
    """
    _check_bi(f, limits)
    irreducibles: dict[BiPoly, None] = {}
    for piece in _squarefree_pieces(f):
        for h in _factor_squarefree(piece, limits):
            irreducibles[h.normalize()] = None
    out = []
    rest = f
    for h in irreducibles:
        m = 0
        while True:
            q, r = rest.divmod(h)
            if r:
                break
            rest, m = q, m + 1
        if m == 0:
            raise InternalError(f"reported factor {h} does not divide the input")
        out.append((h, m))
    if not rest.is_constant():
        raise InternalError("factorization is incomplete")
    out.sort(key=lambda t: t[0].sort_key())
    return out


def bi_irreducible(f: BiPoly, limits: FactorLimits = DEFAULT_LIMITS) -> bool:
    facs = bi_factor(f, limits)
    return len(facs) == 1 and facs[0][1] == 1
