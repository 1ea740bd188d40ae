"""Elements of the fraction field ``k(x, y)`` in lowest terms."""

from __future__ import annotations

from ..coeffs import BiPoly, Field, bi_gcd, parse_quotient


class Frac:
    """``num / den`` with ``gcd(num, den) = 1`` and ``den`` normalized.

    Zero is ``0 / 1``.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: BiPoly, den: BiPoly | None = None, *, reduced: bool = False):
        if den is None:
            den = BiPoly.const(num.field, 1)
        num.field.check(den.field)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            den = BiPoly.const(num.field, 1)
        elif not reduced and not den.is_constant():
            g = bi_gcd(num, den)
            if not g.is_constant():
                num = num.exact_div(g)
                den = den.exact_div(g)
        lc = den.lc
        if lc != 1:
            inv = num.field.inv(lc)
            num, den = num * inv, den * inv
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("Frac is immutable")

    @classmethod
    def parse(cls, text: str, field: Field) -> "Frac":
        num, den = parse_quotient(text, field)
        return cls(num, den)

    @classmethod
    def of(cls, value, field: Field | None = None) -> "Frac":
        if isinstance(value, Frac):
            return value
        if isinstance(value, BiPoly):
            return cls(value)
        if isinstance(value, str):
            if field is None:
                raise TypeError("parsing needs a field")
            return cls.parse(value, field)
        raise TypeError(f"cannot make a Frac from {type(value).__name__}")

    @property
    def field(self) -> Field:
        return self.num.field

    def is_zero(self) -> bool:
        return not self.num

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, BiPoly):
            other = Frac(other)
        if not isinstance(other, Frac):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __str__(self):
        if self.den.is_constant():
            return str(self.num)
        n = str(self.num)
        if len(self.num.terms) > 1:
            n = f"({n})"
        d = str(self.den)
        if len(self.den.terms) > 1:
            d = f"({d})"
        return f"{n}/{d}"

    def __repr__(self):
        return f"Frac({self.field}, {str(self)!r})"

    def _lift(self, other) -> "Frac":
        if isinstance(other, Frac):
            return other
        if isinstance(other, BiPoly):
            return Frac(other)
        return Frac(BiPoly.const(self.field, other))

    def __add__(self, other):
        o = self._lift(other)
        return Frac(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return Frac(-self.num, self.den, reduced=True)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        return Frac(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> "Frac":
        if not self.num:
            raise ZeroDivisionError("inverse of zero")
        return Frac(self.den, self.num, reduced=True)

    def __truediv__(self, other):
        return self * self._lift(other).inverse()

    def __rtruediv__(self, other):
        return self._lift(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return Frac(self.num**n, self.den**n, reduced=True)
