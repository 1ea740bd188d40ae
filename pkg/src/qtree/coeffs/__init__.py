"""Exact arithmetic kernel: fields, polynomials, binary forms, gcd and factoring."""

from .bipoly import BiPoly, parse_quotient, parse_unipoly, term_key
from .factor import DEFAULT_LIMITS, FactorLimits, bi_factor, bi_irreducible, hform_factor, uni_factor
from .field import GF, QQ, Field, Scalar
from .gcd import bi_gcd, bi_lcm
from .hform import HForm
from .unipoly import UniPoly, uni_gcd, uni_gcdex


def poly_arith(a: BiPoly, b: BiPoly, op: str) -> BiPoly:
    """``a op b`` for ``op`` in ``{"add", "sub", "mul"}``."""
    a.field.check(b.field)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


__all__ = [
    "BiPoly", "DEFAULT_LIMITS", "FactorLimits", "Field", "GF", "HForm", "QQ", "Scalar", "UniPoly",
    "bi_factor", "bi_gcd", "bi_irreducible", "bi_lcm", "hform_factor", "parse_quotient",
    "parse_unipoly", "poly_arith", "term_key", "uni_factor", "uni_gcd", "uni_gcdex",
]
