from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from sumpow.errors import DomainError
from sumpow.poly import RationalPolynomial as P

fracs = st.builds(Fraction, st.integers(-50, 50), st.integers(1, 12))
polys = st.lists(fracs, max_size=7).map(P)


def to_sympy(p, x):
    return sympy.Integer(0) + sum(sympy.Rational(c.numerator, c.denominator) * x**i for i, c in enumerate(p.coefficients))


def test_normalization():
    assert P([1, 2, 0, 0]).coefficients == (1, 2)
    assert P([0, 0]).is_zero() and P().degree == -1
    assert P([Fraction(2, 4)]).coefficients == (Fraction(1, 2),)


def test_eval_and_str():
    p = P([Fraction(1, 6), -1, 1])
    assert p(2) == Fraction(13, 6)
    assert str(p) == "x^2 - x + 1/6"
    assert str(-P.x()) == "-x"


@given(polys, polys)
def test_ring_ops_match_sympy(a, b):
    x = sympy.Symbol("x")
    assert sympy.expand(to_sympy(a * b, x) - to_sympy(a, x) * to_sympy(b, x)) == 0
    assert sympy.expand(to_sympy(a - b, x) - (to_sympy(a, x) - to_sympy(b, x))) == 0


@given(polys, polys.filter(lambda p: not p.is_zero()))
def test_divmod_identity(a, b):
    q, r = divmod(a, b)
    assert q * b + r == a
    assert r.degree < b.degree


@given(polys, fracs, fracs)
def test_compose_affine_matches_sympy(p, a, b):
    x = sympy.Symbol("x")
    arg = sympy.Rational(a.numerator, a.denominator) * x + sympy.Rational(b.numerator, b.denominator)
    expected = sympy.expand(to_sympy(p, x).subs(x, arg))
    assert sympy.expand(to_sympy(p.compose_affine(a, b), x) - expected) == 0


def test_derivative_monic_pow():
    p = P([1, 2, 3])
    assert p.derivative() == P([2, 6])
    assert p.monic() == P([Fraction(1, 3), Fraction(2, 3), 1])
    assert (P.x() - 1) ** 3 == P([-1, 3, -3, 1])
    with pytest.raises(DomainError):
        P().monic()
    with pytest.raises(ZeroDivisionError):
        divmod(p, P())


def test_integer_coefficients():
    p = P([Fraction(1, 2), Fraction(1, 3), 1])
    assert p.integer_coefficients() == [3, 2, 6]
