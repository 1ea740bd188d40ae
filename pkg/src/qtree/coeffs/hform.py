"""Binary forms: homogeneous polynomials in the graded variables ``X, Y``."""

from __future__ import annotations

from .bipoly import BiPoly
from .field import Field
from .grammar import format_terms
from .unipoly import UniPoly


class HForm:
    """``sum(coeffs[i] * X^(d-i) * Y^i for i in 0..d)``.

    The zero form is allowed (``is_zero``) but keeps its nominal degree.
    """

    __slots__ = ("field", "degree", "coeffs")

    def __init__(self, field: Field, coeffs):
        cs = tuple(field(c) for c in coeffs)
        if not cs:
            raise ValueError("a form needs at least one coefficient")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "degree", len(cs) - 1)
        object.__setattr__(self, "coeffs", cs)

    def __setattr__(self, name, value):
        raise AttributeError("HForm is immutable")

    @classmethod
    def X(cls, field: Field) -> "HForm":
        return cls(field, [1, 0])

    @classmethod
    def Y(cls, field: Field) -> "HForm":
        return cls(field, [0, 1])

    @classmethod
    def linear(cls, field: Field, a, b) -> "HForm":
        """The form ``a*X + b*Y``."""
        return cls(field, [a, b])

    @classmethod
    def from_bipoly(cls, f: BiPoly) -> "HForm":
        if not f:
            return cls(f.field, [0])
        degs = {i + j for i, j in f.terms}
        if len(degs) != 1:
            raise ValueError("polynomial is not homogeneous")
        d = degs.pop()
        cs = [0] * (d + 1)
        for (_, j), c in f.terms.items():
            cs[j] = c
        return cls(f.field, cs)

    @classmethod
    def from_dehomogenized(cls, u: UniPoly, degree: int | None = None) -> "HForm":
        """Homogenize ``u(t)`` with ``t = Y/X`` to the given degree."""
        d = u.degree if degree is None else degree
        cs = list(u.coeffs) + [0] * (d + 1 - len(u.coeffs))
        return cls(u.field, cs)

    def to_bipoly(self) -> BiPoly:
        d = self.degree
        return BiPoly(self.field, {(d - i, i): c for i, c in enumerate(self.coeffs) if c != 0})

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, HForm):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def sort_key(self):
        return (self.degree, self.coeffs)

    def __str__(self):
        d = self.degree
        terms = [((d - i, i), c) for i, c in enumerate(self.coeffs)]
        return format_terms(reversed(terms), ("x", "y"), self.field.p)

    def __repr__(self):
        return f"HForm({self.field}, {str(self)!r})"

    def __mul__(self, other):
        if not isinstance(other, HForm):
            c = self.field(other)
            return HForm(self.field, [self.field.reduce(a * c) for a in self.coeffs])
        self.field.check(other.field)
        out = [0] * (self.degree + other.degree + 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return HForm(self.field, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = HForm(self.field, [1])
        for _ in range(n):
            out = out * self
        return out

    def normalize(self) -> "HForm":
        """Scale so the coefficient of the highest power of Y is 1."""
        for c in reversed(self.coeffs):
            if c != 0:
                return self * self.field.inv(c)
        return self

    def x_power(self) -> int:
        """Largest ``m`` such that ``X^m`` divides the form."""
        m = 0
        for c in reversed(self.coeffs):
            if c != 0:
                return m
            m += 1
        raise ValueError("x_power of the zero form")

    def dehomogenize(self) -> UniPoly:
        """``F(1, t)``."""
        return UniPoly(self.field, self.coeffs)

    def exact_div(self, other: "HForm") -> "HForm":
        q = self.to_bipoly().exact_div(other.to_bipoly())
        return HForm.from_bipoly(q) if q else HForm(self.field, [0] * (self.degree - other.degree + 1))

    def divides(self, other: "HForm") -> bool:
        return self.to_bipoly().divides(other.to_bipoly())
