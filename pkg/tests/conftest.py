import pytest

from qtree.coeffs import GF, QQ, BiPoly, HForm
from qtree.rlr import EssentialVal, Frac, QuadPath


@pytest.fixture
def F5():
    return GF(5)


@pytest.fixture
def F3():
    return GF(3)


def P(text, field=None):
    return BiPoly.parse(text, field or GF(5))


def path(text, field=None):
    return QuadPath.parse(text, field or GF(5))


def frac(text, field=None):
    return Frac.parse(text, field or GF(5))


def ev(text, field=None):
    return EssentialVal(P(text, field))


def form(text, field=None):
    return HForm.from_bipoly(P(text, field))


__all__ = ["P", "path", "frac", "ev", "form", "QQ"]
