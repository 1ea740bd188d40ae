"""Greatest common divisors in ``k[x, y]``.

The ring is viewed as ``k[x][y]``; contents are univariate gcds in ``x``
and the primitive parts are reduced with a primitive pseudo-remainder
sequence.  Works over F_p and Q alike.
"""

from __future__ import annotations

from functools import reduce

from ..errors import PreconditionError
from .bipoly import BiPoly
from .unipoly import UniPoly, uni_gcd

YPoly = list  # list[UniPoly]: coefficient of y^j at index j


def _strip(a: YPoly) -> YPoly:
    while a and not a[-1]:
        a.pop()
    return a


def content(a: YPoly) -> UniPoly:
    """Monic gcd of the ``k[x]`` coefficients."""
    return reduce(uni_gcd, a[1:], a[0].monic()) if len(a) > 1 else a[0].monic()


def _div_content(a: YPoly, c: UniPoly) -> YPoly:
    return [u.exact_div(c) for u in a]


def primitive_part(a: YPoly) -> YPoly:
    a = _strip(list(a))
    if not a:
        return a
    c = content(a)
    return _div_content(a, c) if c.degree > 0 else a


def pseudo_rem(a: YPoly, b: YPoly) -> YPoly:
    r = _strip(list(a))
    db = len(b) - 1
    lb = b[-1]
    while len(r) - 1 >= db and r:
        shift = len(r) - 1 - db
        lr = r[-1]
        r = [u * lb for u in r]
        for j, v in enumerate(b):
            r[j + shift] = r[j + shift] - lr * v
        r = _strip(r)
    return r


def bi_gcd(a: BiPoly, b: BiPoly) -> BiPoly:
    """Gcd of two bivariate polynomials, normalized to leading coefficient 1."""
    a.field.check(b.field)
    if not a and not b:
        raise PreconditionError("gcd of two zero polynomials")
    if not a:
        return b.normalize()
    if not b:
        return a.normalize()
    F = a.field
    # monomial fast path
    if len(a.terms) == 1 and len(b.terms) == 1:
        (i1, j1), = a.terms
        (i2, j2), = b.terms
        return BiPoly.monomial(F, min(i1, i2), min(j1, j2))
    A = a.y_coeffs()
    B = b.y_coeffs()
    ca, cb = content(A), content(B)
    c = uni_gcd(ca, cb)
    pa = _div_content(A, ca) if ca.degree > 0 else A
    pb = _div_content(B, cb) if cb.degree > 0 else B
    if len(pa) < len(pb):
        pa, pb = pb, pa
    while len(pb) > 1:
        r = pseudo_rem(pa, pb)
        if not r:
            break
        pa, pb = pb, primitive_part(r)
    g = pb if len(pb) > 1 else [UniPoly.constant(F, 1)]
    g = primitive_part(g)
    g = [u * c for u in g]
    return BiPoly.from_y_coeffs(g, F).normalize()


def bi_lcm(a: BiPoly, b: BiPoly) -> BiPoly:
    return (a * b).exact_div(bi_gcd(a, b)).normalize()
