"""Sparse bivariate polynomials in ``x, y`` over a :class:`Field`.

Terms are stored as ``{(i, j): c}`` meaning ``c * x^i * y^j`` with no
zero coefficients.  The canonical term order is graded lex with
``y > x``: the leading term has the largest total degree, ties broken
by the larger power of ``y``.  With this order a linear form ``y - c*x``
and the initial form ``y^2`` are already normalized.
"""

from __future__ import annotations

from math import comb
from typing import Iterable, Mapping

from ..errors import ParseError
from .field import Field, Scalar
from .grammar import evaluate, format_terms, parse_tree
from .unipoly import UniPoly


def term_key(e):
    """Sort key of an exponent pair in the graded lex order (y > x)."""
    return (e[0] + e[1], e[1], e[0])


class BiPoly:
    __slots__ = ("field", "terms", "_hash")

    def __init__(self, field: Field, terms: Mapping | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        out: dict = {}
        for (i, j), c in items:
            if i < 0 or j < 0:
                raise ValueError("negative exponent")
            c = field(c)
            if (i, j) in out:
                c = field.reduce(out[(i, j)] + c)
            out[(i, j)] = c
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "terms", {e: c for e, c in out.items() if c != 0})
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("BiPoly is immutable")

    @classmethod
    def _raw(cls, field: Field, terms: dict) -> "BiPoly":
        # terms must be reduced and free of zeros
        obj = object.__new__(cls)
        object.__setattr__(obj, "field", field)
        object.__setattr__(obj, "terms", terms)
        object.__setattr__(obj, "_hash", None)
        return obj

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, field: Field) -> "BiPoly":
        return cls._raw(field, {})

    @classmethod
    def const(cls, field: Field, c) -> "BiPoly":
        c = field(c)
        return cls._raw(field, {(0, 0): c} if c != 0 else {})

    @classmethod
    def monomial(cls, field: Field, i: int, j: int, c=1) -> "BiPoly":
        return cls(field, {(i, j): c})

    @classmethod
    def x(cls, field: Field) -> "BiPoly":
        return cls._raw(field, {(1, 0): field.one})

    @classmethod
    def y(cls, field: Field) -> "BiPoly":
        return cls._raw(field, {(0, 1): field.one})

    @classmethod
    def parse(cls, text: str, field: Field) -> "BiPoly":
        """Parse the polynomial grammar in ``x`` and ``y``."""
        num, den = parse_quotient(text, field)
        if den.total_degree() > 0:
            q, r = num.divmod(den)
            if r:
                raise ParseError(f"{text!r} is not a polynomial")
            return q
        return num * field.inv(den.constant_term())

    @classmethod
    def from_y_coeffs(cls, coeffs: list[UniPoly], field: Field) -> "BiPoly":
        """Inverse of :meth:`y_coeffs`."""
        terms = {}
        for j, u in enumerate(coeffs):
            for i, c in enumerate(u.coeffs):
                if c != 0:
                    terms[(i, j)] = c
        return cls._raw(field, terms)

    # -- basic queries ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, BiPoly):
            return self.field == other.field and self.terms == other.terms
        if isinstance(other, int) and other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.field, frozenset(self.terms.items()))))
        return self._hash

    def sorted_terms(self) -> list:
        """Terms from the leading one downwards."""
        return sorted(self.terms.items(), key=lambda t: term_key(t[0]), reverse=True)

    def sort_key(self):
        """Deterministic key used to order lists of polynomials."""
        return (self.total_degree(), [(term_key(e), c) for e, c in self.sorted_terms()])

    def __str__(self):
        return format_terms(self.sorted_terms(), ("x", "y"), self.field.p)

    def __repr__(self):
        return f"BiPoly({self.field}, {str(self)!r})"

    def leading_monomial(self):
        return max(self.terms, key=term_key)

    @property
    def lc(self) -> Scalar:
        if not self.terms:
            return self.field.zero
        return self.terms[self.leading_monomial()]

    def total_degree(self) -> int:
        return max((i + j for i, j in self.terms), default=-1)

    def ord(self) -> int:
        """Order at the origin: the lowest total degree of a term."""
        if not self.terms:
            raise ValueError("order of the zero polynomial")
        return min(i + j for i, j in self.terms)

    def deg_x(self) -> int:
        return max((i for i, _ in self.terms), default=-1)

    def deg_y(self) -> int:
        return max((j for _, j in self.terms), default=-1)

    def constant_term(self) -> Scalar:
        return self.terms.get((0, 0), self.field.zero)

    def is_constant(self) -> bool:
        return all(e == (0, 0) for e in self.terms)

    def vanishes_at_origin(self) -> bool:
        return (0, 0) not in self.terms

    def homogeneous_part(self, d: int) -> "BiPoly":
        return BiPoly._raw(self.field, {e: c for e, c in self.terms.items() if e[0] + e[1] == d})

    def truncate(self, n: int) -> "BiPoly":
        """Drop all terms of total degree ``>= n``."""
        return BiPoly._raw(self.field, {e: c for e, c in self.terms.items() if e[0] + e[1] < n})

    def truncate_x(self, n: int) -> "BiPoly":
        """Reduce modulo ``x^n``."""
        return BiPoly._raw(self.field, {e: c for e, c in self.terms.items() if e[0] < n})

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> "BiPoly":
        if isinstance(other, BiPoly):
            self.field.check(other.field)
            return other
        if isinstance(other, UniPoly):
            raise TypeError("mixing UniPoly and BiPoly")
        return BiPoly.const(self.field, other)

    def __neg__(self):
        red = self.field.reduce
        return BiPoly._raw(self.field, {e: red(-c) for e, c in self.terms.items()})

    def __add__(self, other):
        other = self._coerce(other)
        red = self.field.reduce
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = red(out.get(e, 0) + c)
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return BiPoly._raw(self.field, out)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, BiPoly):
            if isinstance(other, UniPoly):
                raise TypeError("mixing UniPoly and BiPoly")
            c = self.field(other)
            if c == 0:
                return BiPoly.zero(self.field)
            red = self.field.reduce
            return BiPoly._raw(self.field, {e: red(v * c) for e, v in self.terms.items()})
        self.field.check(other.field)
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        acc: dict = {}
        get = acc.get
        for (i1, j1), c1 in b.items():
            for (i2, j2), c2 in a.items():
                k = (i1 + i2, j1 + j2)
                acc[k] = get(k, 0) + c1 * c2
        red = self.field.reduce
        out = {}
        for e, c in acc.items():
            c = red(c)
            if c:
                out[e] = c
        return BiPoly._raw(self.field, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = BiPoly.const(self.field, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale(self, c) -> "BiPoly":
        return self * c

    def shift_exponents(self, di: int, dj: int) -> "BiPoly":
        """Multiply by ``x^di y^dj`` (negative shifts must be exact)."""
        out = {}
        for (i, j), c in self.terms.items():
            if i + di < 0 or j + dj < 0:
                raise ArithmeticError("inexact monomial division")
            out[(i + di, j + dj)] = c
        return BiPoly._raw(self.field, out)

    def normalize(self) -> "BiPoly":
        """Scale so the leading coefficient (graded lex, y > x) is 1."""
        if not self.terms:
            return self
        lc = self.lc
        if lc == 1:
            return self
        return self * self.field.inv(lc)

    def divmod(self, other: "BiPoly"):
        """Division by a single divisor in the graded lex order.

        Returns ``(q, r)`` with ``self = q*other + r`` and no term of ``r``
        divisible by the leading monomial of ``other``.
        """
        other = self._coerce(other)
        if not other.terms:
            raise ZeroDivisionError("division by the zero polynomial")
        F = self.field
        red = F.reduce
        lm = other.leading_monomial()
        inv = F.inv(other.terms[lm])
        div_terms = list(other.terms.items())
        rem = dict(self.terms)
        quo: dict = {}
        rest: dict = {}
        while rem:
            m = max(rem, key=term_key)
            c = rem[m]
            di, dj = m[0] - lm[0], m[1] - lm[1]
            if di < 0 or dj < 0:
                rest[m] = rem.pop(m)
                continue
            q = red(c * inv)
            quo[(di, dj)] = q
            for (i, j), b in div_terms:
                k = (i + di, j + dj)
                v = red(rem.get(k, 0) - q * b)
                if v:
                    rem[k] = v
                else:
                    rem.pop(k, None)
        return BiPoly._raw(F, quo), BiPoly._raw(F, rest)

    def exact_div(self, other: "BiPoly") -> "BiPoly":
        q, r = self.divmod(other)
        if r.terms:
            raise ArithmeticError("inexact polynomial division")
        return q

    def divides(self, other: "BiPoly") -> bool:
        """True iff ``self`` divides ``other``."""
        return not other.divmod(self)[1].terms

    # -- evaluation and substitution -----------------------------------------

    def __call__(self, a, b) -> Scalar:
        F = self.field
        a, b = F(a), F(b)
        acc = 0
        for (i, j), c in self.terms.items():
            acc += c * a**i * b**j
        return F.reduce(acc) if F.p is not None else F(acc)

    def compose(self, phi: "BiPoly", psi: "BiPoly") -> "BiPoly":
        """Substitute ``x <- phi``, ``y <- psi``."""
        F = self.field
        F.check(phi.field)
        F.check(psi.field)
        xp = [BiPoly.const(F, 1)]
        yp = [BiPoly.const(F, 1)]
        for _ in range(self.deg_x()):
            xp.append(xp[-1] * phi)
        for _ in range(self.deg_y()):
            yp.append(yp[-1] * psi)
        out = BiPoly.zero(F)
        by_j: dict = {}
        for (i, j), c in self.terms.items():
            by_j.setdefault(j, []).append((i, c))
        for j, row in by_j.items():
            part = BiPoly.zero(F)
            for i, c in row:
                part = part + xp[i] * c
            out = out + part * yp[j]
        return out

    def subs_x_shift(self, a) -> "BiPoly":
        """Return ``self(x + a, y)``."""
        F = self.field
        a = F(a)
        if a == 0:
            return self
        acc: dict = {}
        for (i, j), c in self.terms.items():
            for k in range(i + 1):
                key = (k, j)
                acc[key] = acc.get(key, 0) + c * comb(i, k) * a ** (i - k)
        return BiPoly(F, acc)

    def swap(self) -> "BiPoly":
        """Exchange ``x`` and ``y``."""
        return BiPoly._raw(self.field, {(j, i): c for (i, j), c in self.terms.items()})

    def shear(self, c) -> "BiPoly":
        """Return ``self(x + c*y, y)``."""
        return self.compose(BiPoly.x(self.field) + BiPoly.y(self.field) * c, BiPoly.y(self.field))

    def diff_x(self) -> "BiPoly":
        red = self.field.reduce
        return BiPoly(self.field, {(i - 1, j): red(i * c) for (i, j), c in self.terms.items() if i})

    def diff_y(self) -> "BiPoly":
        red = self.field.reduce
        return BiPoly(self.field, {(i, j - 1): red(j * c) for (i, j), c in self.terms.items() if j})

    def y_coeffs(self) -> list[UniPoly]:
        """View as a polynomial in ``y`` with coefficients in ``k[x]``."""
        F = self.field
        rows: list[list] = [[] for _ in range(self.deg_y() + 1)]
        dx = self.deg_x()
        for r in rows:
            r.extend([0] * (dx + 1))
        for (i, j), c in self.terms.items():
            rows[j][i] = c
        return [UniPoly._raw(F, r) for r in rows]


class _PolyQuot:
    """Numerator/denominator pair used only while parsing."""

    __slots__ = ("num", "den")

    def __init__(self, num: BiPoly, den: BiPoly | None = None):
        self.num = num
        self.den = den if den is not None else BiPoly.const(num.field, 1)

    def __add__(self, o):
        return _PolyQuot(self.num * o.den + o.num * self.den, self.den * o.den)

    def __sub__(self, o):
        return _PolyQuot(self.num * o.den - o.num * self.den, self.den * o.den)

    def __mul__(self, o):
        return _PolyQuot(self.num * o.num, self.den * o.den)

    def __truediv__(self, o):
        if not o.num:
            raise ZeroDivisionError
        return _PolyQuot(self.num * o.den, self.den * o.num)

    def __neg__(self):
        return _PolyQuot(-self.num, self.den)

    def __pow__(self, n):
        return _PolyQuot(self.num**n, self.den**n)


def parse_quotient(text: str, field: Field) -> tuple[BiPoly, BiPoly]:
    """Parse an element of ``k(x, y)`` as an unreduced ``(num, den)`` pair."""
    tree = parse_tree(text, ("x", "y"))
    gens = {"x": BiPoly.x(field), "y": BiPoly.y(field)}
    val = evaluate(
        tree,
        const=lambda c: _PolyQuot(BiPoly.const(field, c)),
        var=lambda v: _PolyQuot(gens[v]),
    )
    return val.num, val.den


def parse_unipoly(text: str, field: Field) -> UniPoly:
    """Parse the univariate grammar in ``t``."""
    tree = parse_tree(text, ("t",))

    class _U:
        __slots__ = ("num", "den")

        def __init__(self, num, den=None):
            self.num = num
            self.den = den if den is not None else UniPoly.constant(field, 1)

        def __add__(self, o):
            return _U(self.num * o.den + o.num * self.den, self.den * o.den)

        def __sub__(self, o):
            return _U(self.num * o.den - o.num * self.den, self.den * o.den)

        def __mul__(self, o):
            return _U(self.num * o.num, self.den * o.den)

        def __truediv__(self, o):
            if not o.num:
                raise ZeroDivisionError
            return _U(self.num * o.den, self.den * o.num)

        def __neg__(self):
            return _U(-self.num, self.den)

        def __pow__(self, n):
            return _U(self.num**n, self.den**n)

    val = evaluate(tree, const=lambda c: _U(UniPoly.constant(field, c)), var=lambda v: _U(UniPoly(field, [0, 1])))
    if val.den.degree > 0:
        raise ParseError(f"{text!r} is not a polynomial")
    return val.num * field.inv(val.den.lc)
