"""Points of the rational quadratic tree, written as chains of directions."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterator

from ..coeffs import Field, HForm, Scalar
from ..errors import ParseError


@dataclass(frozen=True)
class Direction:
    """A rational point of the exceptional line.

    ``c`` set: the direction of the linear form ``Y - c*X``.  ``c is None``:
    the direction of ``X`` (the point at infinity).
    """

    c: Scalar | None = None

    @classmethod
    def finite(cls, c) -> "Direction":
        return cls(c)

    @property
    def is_infinite(self) -> bool:
        return self.c is None

    def form(self, field: Field) -> HForm:
        if self.c is None:
            return HForm.X(field)
        return HForm.linear(field, -field(self.c), 1)

    def to_json(self) -> dict:
        return {"infinity": True} if self.c is None else {"finite": str(self.c)}

    def __str__(self):
        return "inf" if self.c is None else str(self.c)

    def __repr__(self):
        return "Infinity" if self.c is None else f"Finite({self.c})"


INF = Direction(None)


def Finite(c) -> Direction:
    return Direction(c)


@dataclass(frozen=True)
class NonRational:
    """An irreducible tangent form of degree >= 2 (no rational child)."""

    degree: int

    def to_json(self) -> dict:
        return {"nonrational": self.degree}

    def __str__(self):
        return f"nonrational({self.degree})"


@dataclass(frozen=True)
class QuadPath:
    """The node reached from the root by blowing up along ``dirs``.

    The empty path is the root ring itself; the level of a node is its length.
    """

    field: Field
    dirs: tuple[Direction, ...] = ()

    def __post_init__(self):
        dirs = tuple(
            d if d.c is None else Direction(self.field(d.c))
            for d in (self._as_direction(x) for x in self.dirs)
        )
        object.__setattr__(self, "dirs", dirs)

    @staticmethod
    def _as_direction(d) -> Direction:
        if isinstance(d, Direction):
            return d
        if d is None or (isinstance(d, str) and d.strip().lower() in ("inf", "infinity")):
            return INF
        return Direction(d)

    @classmethod
    def root(cls, field: Field) -> "QuadPath":
        return cls(field, ())

    @classmethod
    def parse(cls, text: str, field: Field) -> "QuadPath":
        """Parse ``"[0, 1, inf]"``."""
        s = text.strip()
        if not (s.startswith("[") and s.endswith("]")):
            raise ParseError(f"path must look like '[c0, inf, ...]', got {text!r}")
        body = s[1:-1].strip()
        if not body:
            return cls(field, ())
        dirs = []
        for tok in body.split(","):
            tok = tok.strip()
            if tok.lower() in ("inf", "infinity"):
                dirs.append(INF)
            else:
                try:
                    dirs.append(Direction(field(tok)))
                except (ValueError, ZeroDivisionError) as exc:
                    raise ParseError(f"bad direction {tok!r} in {text!r}") from exc
        return cls(field, tuple(dirs))

    @classmethod
    def from_json(cls, obj, field: Field) -> "QuadPath":
        if isinstance(obj, str):
            obj = json.loads(obj)
        try:
            entries = obj["dirs"]
            dirs = []
            for e in entries:
                if e.get("infinity"):
                    dirs.append(INF)
                else:
                    dirs.append(Direction(field(e["finite"])))
        except (KeyError, TypeError, AttributeError) as exc:
            raise ParseError(f"bad path JSON {obj!r}") from exc
        return cls(field, tuple(dirs))

    def to_json(self) -> dict:
        return {"dirs": [d.to_json() for d in self.dirs]}

    def __str__(self):
        return "[" + ", ".join(str(d) for d in self.dirs) + "]"

    def __repr__(self):
        return f"QuadPath({self.field}, {self})"

    def __len__(self):
        return len(self.dirs)

    def __iter__(self) -> Iterator[Direction]:
        return iter(self.dirs)

    def __getitem__(self, item):
        if isinstance(item, slice):
            return QuadPath(self.field, self.dirs[item])
        return self.dirs[item]

    def child(self, d) -> "QuadPath":
        return QuadPath(self.field, self.dirs + (self._as_direction(d),))

    def is_prefix_of(self, other: "QuadPath") -> bool:
        return len(self) <= len(other) and other.dirs[: len(self)] == self.dirs

    def sort_key(self):
        return (len(self), tuple((d.c is None, d.c if d.c is not None else 0) for d in self.dirs))
