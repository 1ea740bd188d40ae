"""Dense univariate polynomials over a :class:`Field`."""

from __future__ import annotations

from .field import Field, Scalar


class UniPoly:
    """Polynomial ``c[0] + c[1] t + ... + c[n] t^n`` with ``c[n] != 0``.

    The zero polynomial has an empty coefficient tuple and degree ``-1``.
    Instances are immutable.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs=()):
        cs = [field(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("UniPoly is immutable")

    @classmethod
    def _raw(cls, field: Field, cs: list) -> "UniPoly":
        # cs already reduced; strips trailing zeros in place
        while cs and cs[-1] == 0:
            cs.pop()
        obj = object.__new__(cls)
        object.__setattr__(obj, "field", field)
        object.__setattr__(obj, "coeffs", tuple(cs))
        return obj

    @classmethod
    def constant(cls, field: Field, c) -> "UniPoly":
        return cls(field, [c])

    @classmethod
    def monomial(cls, field: Field, n: int, c=1) -> "UniPoly":
        return cls(field, [0] * n + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> Scalar:
        return self.coeffs[-1] if self.coeffs else self.field.zero

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.field == other.field and self.coeffs == other.coeffs
        if isinstance(other, int) and other == 0:
            return not self.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __repr__(self):
        return f"UniPoly({self.field}, {str(self)!r})"

    def __str__(self):
        from .grammar import format_terms

        terms = [((i,), c) for i, c in enumerate(self.coeffs)]
        return format_terms(reversed(terms), ("t",), self.field.p)

    def __call__(self, t) -> Scalar:
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = self.field.reduce(acc * t + c)
        return acc

    def __neg__(self):
        return UniPoly._raw(self.field, [self.field.reduce(-c) for c in self.coeffs])

    def __add__(self, other):
        if not isinstance(other, UniPoly):
            other = UniPoly.constant(self.field, other)
        self.field.check(other.field)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        red = self.field.reduce
        cs = [red(x + y) for x, y in zip(a, b)] + list(a[len(b):])
        return UniPoly._raw(self.field, cs)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, UniPoly):
            other = UniPoly.constant(self.field, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, UniPoly):
            c = self.field(other)
            return UniPoly._raw(self.field, [self.field.reduce(x * c) for x in self.coeffs])
        self.field.check(other.field)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly._raw(self.field, [])
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        red = self.field.reduce
        return UniPoly._raw(self.field, [red(c) for c in out])

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = UniPoly.constant(self.field, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other: "UniPoly"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        F = self.field
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return UniPoly._raw(F, []), self
        inv_lc = F.inv(other.lc)
        quo = [0] * (dq + 1)
        b = other.coeffs
        nb = len(b) - 1
        for k in range(dq, -1, -1):
            c = F.reduce(rem[k + nb] * inv_lc)
            quo[k] = c
            if c:
                for j in range(nb + 1):
                    rem[k + j] = F.reduce(rem[k + j] - c * b[j])
        return UniPoly._raw(F, quo), UniPoly._raw(F, rem[:nb])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other: "UniPoly") -> "UniPoly":
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError("inexact polynomial division")
        return q

    def monic(self) -> "UniPoly":
        if not self.coeffs:
            return self
        return self * self.field.inv(self.lc)

    def derivative(self) -> "UniPoly":
        return UniPoly._raw(self.field, [self.field.reduce(i * c) for i, c in enumerate(self.coeffs)][1:])

    def shift(self, n: int) -> "UniPoly":
        """Multiply by ``t^n``."""
        if not self.coeffs:
            return self
        return UniPoly._raw(self.field, [0] * n + list(self.coeffs))

    def truncate(self, n: int) -> "UniPoly":
        """Reduce modulo ``t^n``."""
        return UniPoly._raw(self.field, list(self.coeffs[:n]))

    def compose_shift(self, a) -> "UniPoly":
        """Return ``self(t + a)``."""
        out = UniPoly._raw(self.field, [])
        lin = UniPoly(self.field, [a, 1])
        for c in reversed(self.coeffs):
            out = out * lin + c
        return out


def uni_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd (zero if both inputs are zero)."""
    while b:
        a, b = b, a % b
    return a.monic()


def uni_gcdex(a: UniPoly, b: UniPoly):
    """Return ``(s, t, g)`` with ``s a + t b = g`` and ``g`` the monic gcd."""
    F = a.field
    r0, r1 = a, b
    s0, s1 = UniPoly.constant(F, 1), UniPoly(F)
    t0, t1 = UniPoly(F), UniPoly.constant(F, 1)
    while r1:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if not r0:
        return s0, t0, r0
    inv = F.inv(r0.lc)
    return s0 * inv, t0 * inv, r0 * inv
