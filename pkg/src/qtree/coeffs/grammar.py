"""Text form of polynomials and field elements.

Grammar: integer (or ``a/b`` rational) constants, the variables of the
ring, ``+ - * /``, parentheses and ``^`` for non-negative integer powers,
e.g. ``3*x^2*y - y^3 + 1``.  The text is rewritten to Python syntax
(``^`` -> ``**``) and walked with :mod:`ast`; anything outside the grammar
is rejected.
"""

from __future__ import annotations

import ast
from fractions import Fraction
from typing import Callable, Iterable

from ..errors import ParseError

_BINOPS = (ast.Add, ast.Sub, ast.Mult, ast.Div, ast.Pow)


def parse_tree(text: str, variables: Iterable[str]):
    """Parse ``text`` into a checked :mod:`ast` expression."""
    variables = set(variables)
    if not isinstance(text, str) or not text.strip():
        raise ParseError("empty expression")
    if "**" in text:
        raise ParseError("use '^' for powers")
    src = text.replace("^", "**")
    try:
        tree = ast.parse(src.strip(), mode="eval")
    except SyntaxError as exc:
        raise ParseError(f"cannot parse {text!r}: {exc.msg}") from None

    def check(node):
        if isinstance(node, ast.Expression):
            check(node.body)
        elif isinstance(node, ast.BinOp):
            if not isinstance(node.op, _BINOPS):
                raise ParseError(f"operator not allowed in {text!r}")
            check(node.left)
            if isinstance(node.op, ast.Pow):
                exp = node.right
                if not (isinstance(exp, ast.Constant) and type(exp.value) is int and exp.value >= 0):
                    raise ParseError(f"exponent must be a non-negative integer in {text!r}")
            else:
                check(node.right)
        elif isinstance(node, ast.UnaryOp):
            if not isinstance(node.op, (ast.USub, ast.UAdd)):
                raise ParseError(f"operator not allowed in {text!r}")
            check(node.operand)
        elif isinstance(node, ast.Constant):
            if type(node.value) is not int:
                raise ParseError(f"bad constant {node.value!r} in {text!r}")
        elif isinstance(node, ast.Name):
            if node.id not in variables:
                raise ParseError(f"unknown identifier {node.id!r} in {text!r}")
        else:
            raise ParseError(f"unsupported syntax in {text!r}")

    check(tree)
    return tree.body


def evaluate(node, *, const: Callable, var: Callable):
    """Fold a checked tree with the given constant/variable constructors.

    The values produced must support ``+ - * /``, unary minus and ``**``.
    """

    def ev(n):
        if isinstance(n, ast.Constant):
            return const(n.value)
        if isinstance(n, ast.Name):
            return var(n.id)
        if isinstance(n, ast.UnaryOp):
            v = ev(n.operand)
            return -v if isinstance(n.op, ast.USub) else v
        left = ev(n.left)
        if isinstance(n.op, ast.Pow):
            return left ** n.right.value
        right = ev(n.right)
        if isinstance(n.op, ast.Add):
            return left + right
        if isinstance(n.op, ast.Sub):
            return left - right
        if isinstance(n.op, ast.Mult):
            return left * right
        try:
            return left / right
        except ZeroDivisionError:
            raise ParseError("division by zero") from None

    return ev(node)


def _signed(c, p):
    """Symmetric representative for display over F_p."""
    if p is not None and p > 2 and c > p // 2:
        return c - p
    return c


def format_terms(terms, names=("t",), p=None) -> str:
    """Render ``[(exponents, coeff), ...]`` (already in display order)."""
    parts = []
    for exps, c in terms:
        c = _signed(c, p)
        if c == 0:
            continue
        mono = "*".join(
            (v if e == 1 else f"{v}^{e}") for v, e in zip(names, exps) if e
        )
        neg = c < 0
        a = -c if neg else c
        if isinstance(a, Fraction) and a.denominator == 1:
            a = a.numerator
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        if not parts:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f" - {body}" if neg else f" + {body}")
    return "".join(parts) if parts else "0"
