"""Lifting a coprime factorization of an initial form.

Given ``f`` whose initial form factors as ``G * H`` with ``G, H`` coprime,
build ``g, h`` with initial forms ``G, H`` and ``f - g*h`` of order at
least ``n``.  The lift is degreewise: the degree-``d`` part ``e`` of the
current remainder is killed by homogeneous corrections ``a, b`` solving
``G*b + H*a = e``, an exact linear system over the base field.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coeffs import BiPoly, Field, HForm, hform_factor
from .errors import InternalError, PreconditionError


def _coprime(G: HForm, H: HForm) -> bool:
    if G.degree == 0 or H.degree == 0:
        return True
    fg = {g for g, _ in hform_factor(G)}
    return not any(h in fg for h, _ in hform_factor(H))


def _solve_least(A: list[list], rhs: list, field: Field) -> list | None:
    """Zero-preferring lexicographically least solution of ``A z = rhs``.

    Columns are eliminated in reverse order and free variables set to 0,
    so each unknown, in order, is 0 whenever the earlier ones allow it.
    Returns ``None`` for an inconsistent system.
    """
    nrows, ncols = len(A), len(A[0]) if A else 0
    order = list(range(ncols - 1, -1, -1))
    M = [[A[r][c] for c in order] + [rhs[r]] for r in range(nrows)]
    red, inv = field.reduce, field.inv
    pivots = []
    row = 0
    for col in range(ncols):
        pr = next((r for r in range(row, nrows) if M[r][col] != 0), None)
        if pr is None:
            continue
        M[row], M[pr] = M[pr], M[row]
        s = inv(M[row][col])
        M[row] = [red(v * s) for v in M[row]]
        for r in range(nrows):
            if r != row and M[r][col] != 0:
                t = M[r][col]
                M[r] = [red(a - t * b) for a, b in zip(M[r], M[row])]
        pivots.append(col)
        row += 1
        if row == nrows:
            break
    for r in range(row, nrows):
        if M[r][-1] != 0:
            return None
    z = [field.zero] * ncols
    for r, col in enumerate(pivots):
        z[order[col]] = M[r][-1]
    return z


def bezout_solve(G: HForm, H: HForm, e: HForm) -> tuple[HForm, HForm]:
    """Homogeneous ``(a, b)`` with ``G*b + H*a = e``.

    ``deg a = deg e - deg H`` and ``deg b = deg e - deg G``.  Among all
    solutions the one whose coefficient vector ``(a..., b...)`` (basis
    ``X^d, X^(d-1)Y, ..., Y^d``) is lexicographically least is returned.
    """
    field = G.field
    field.check(H.field)
    field.check(e.field)
    if not _coprime(G, H):
        raise PreconditionError(f"{G} and {H} are not coprime")
    d = e.degree
    if d < G.degree + H.degree:
        raise PreconditionError(f"degree {d} is below deg G + deg H = {G.degree + H.degree}")
    da, db = d - H.degree, d - G.degree
    ncols = (da + 1) + (db + 1)
    A = [[field.zero] * ncols for _ in range(d + 1)]
    # column k < da+1: a has X^(da-k) Y^k; H * that contributes at Y-index k + i
    for k in range(da + 1):
        for i, h in enumerate(H.coeffs):
            A[k + i][k] = field.reduce(A[k + i][k] + h)
    for k in range(db + 1):
        col = da + 1 + k
        for i, g in enumerate(G.coeffs):
            A[k + i][col] = field.reduce(A[k + i][col] + g)
    z = _solve_least(A, list(e.coeffs), field)
    if z is None:
        raise InternalError("Bezout system is singular for coprime forms")
    a = HForm(field, z[: da + 1])
    b = HForm(field, z[da + 1:])
    return a, b


@dataclass(frozen=True)
class LiftResult:
    """``g, h`` and the order of ``f - g*h`` (``None`` when it vanishes)."""

    g: BiPoly
    h: BiPoly
    achieved_order: int | None
    remainder: BiPoly

    @property
    def exact(self) -> bool:
        return not self.remainder


def _component(f: BiPoly, d: int) -> HForm:
    part = f.homogeneous_part(d)
    return HForm.from_bipoly(part) if part else HForm(f.field, [0] * (d + 1))


def lift_factorization(f: BiPoly, G: HForm, H: HForm, n: int) -> LiftResult:
    """Lift ``in(f) = G*H`` to ``f = g*h mod m^n``.

    ``g`` starts as the form ``lambda*G`` (``lambda`` absorbs the scalar
    between ``in(f)`` and ``G*H``) and ``h`` as ``H``; the corrections
    of degree ``d`` are fixed once and never revisited, so a larger ``n``
    only appends higher-degree terms.
    """
    field = f.field
    if not f:
        raise PreconditionError("cannot lift the zero polynomial")
    r = f.ord()
    if r == 0:
        raise PreconditionError("f must lie in the maximal ideal")
    if G.degree + H.degree != r:
        raise PreconditionError("deg G + deg H must equal ord f")
    if n <= r:
        raise PreconditionError(f"target order {n} must exceed ord f = {r}")
    init = f.homogeneous_part(r)
    GH = (G * H).to_bipoly()
    lam = init.lc * field.inv(GH.lc) if GH else None
    if GH.is_zero() or init != GH * lam:
        raise PreconditionError("in(f) is not G*H up to a scalar")
    if not _coprime(G, H):
        raise PreconditionError(f"{G} and {H} are not coprime")
    g = G.to_bipoly() * lam
    h = H.to_bipoly()
    inv_lam = field.inv(lam)
    for d in range(r + 1, n):
        e = _component(f - g * h, d)
        if e.is_zero():
            continue
        a, b = bezout_solve(G, H, e)
        # lam*G*(b/lam) + H*a = e
        g = g + a.to_bipoly()
        h = h + b.to_bipoly() * inv_lam
    rem = f - g * h
    achieved = rem.ord() if rem else None
    if achieved is not None and achieved < n:
        raise InternalError("lifting did not reach the requested order")
    return LiftResult(g, h, achieved, rem)
