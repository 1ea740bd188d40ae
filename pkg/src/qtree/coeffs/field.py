"""Base fields: prime fields F_p and the rationals.

Scalars are plain Python values: ``int`` in ``[0, p)`` for F_p and
``fractions.Fraction`` for Q.  The :class:`Field` descriptor carries all
the arithmetic that differs between the two.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Union

from sympy import isprime

from ..errors import FieldMismatch, ParseError, PreconditionError

Scalar = Union[int, Fraction]

MAX_MODULUS = 2**16


@dataclass(frozen=True)
class Field:
    """A prime field ``F_p`` (``p`` set) or the rationals (``p is None``)."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None:
            if not isinstance(self.p, int) or not isprime(self.p):
                raise PreconditionError(f"modulus {self.p!r} is not prime")
            if self.p > MAX_MODULUS:
                raise PreconditionError(f"modulus {self.p} exceeds 2^16")

    @classmethod
    def parse(cls, text: str | int) -> "Field":
        """``"5"`` or ``5`` gives F_5, ``"Q"``/``"rationals"`` gives Q."""
        if isinstance(text, int):
            return cls(text)
        s = str(text).strip().lower()
        if s in ("q", "qq", "rational", "rationals"):
            return cls(None)
        try:
            return cls(int(s))
        except ValueError:
            raise ParseError(f"unknown field {text!r}") from None

    @property
    def is_finite(self) -> bool:
        return self.p is not None

    @property
    def zero(self) -> Scalar:
        return 0 if self.p is not None else Fraction(0)

    @property
    def one(self) -> Scalar:
        return 1 if self.p is not None else Fraction(1)

    def __call__(self, value) -> Scalar:
        """Coerce an int, Fraction or numeric string into this field."""
        if isinstance(value, str):
            try:
                value = Fraction(value.strip())
            except ValueError:
                raise ParseError(f"not a field scalar: {value!r}") from None
        if self.p is None:
            return Fraction(value)
        if isinstance(value, Fraction):
            if value.denominator == 1:
                return int(value.numerator) % self.p
            return value.numerator * self.inv(value.denominator % self.p) % self.p
        return int(value) % self.p

    def reduce(self, c) -> Scalar:
        return c % self.p if self.p is not None else c

    def inv(self, c) -> Scalar:
        if self.p is None:
            if c == 0:
                raise ZeroDivisionError("inverse of zero")
            return 1 / Fraction(c)
        c %= self.p
        if c == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(c, -1, self.p)

    def div(self, a, b) -> Scalar:
        return self.reduce(a * self.inv(b))

    def elements(self) -> Iterator[int]:
        if self.p is None:
            raise PreconditionError("cannot enumerate the rationals")
        return iter(range(self.p))

    def check(self, other: "Field") -> None:
        if other != self:
            raise FieldMismatch(f"mixed fields {self} and {other}")

    def format(self, c) -> str:
        return str(c)

    def __str__(self):
        return f"F_{self.p}" if self.p is not None else "Q"


QQ = Field(None)


def GF(p: int) -> Field:
    return Field(p)
