from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from sumpow.errors import DomainError, UndefinedValuationError
from sumpow.exactnum import (
    format_rational,
    integer_nth_root,
    is_prime,
    parse_rational,
    rational_nth_power_root,
    vp,
)

nonzero_rationals = st.builds(
    Fraction,
    st.integers(-10**12, 10**12).filter(bool),
    st.integers(1, 10**12),
)
small_primes = st.sampled_from([2, 3, 5, 7, 11, 13])


@pytest.mark.parametrize(
    "q, p, expected",
    [(Fraction(1, 6), 2, -1), (8, 2, 3), (Fraction(5, 66), 11, -1), (Fraction(-12, 7), 3, 1)],
)
def test_vp_examples(q, p, expected):
    assert vp(q, p) == expected


def test_vp_errors():
    with pytest.raises(UndefinedValuationError):
        vp(0, 2)
    with pytest.raises(DomainError):
        vp(5, 4)
    with pytest.raises(DomainError):
        vp(5, 1)


@given(nonzero_rationals, nonzero_rationals, small_primes)
def test_vp_is_additive(q, r, p):
    assert vp(q * r, p) == vp(q, p) + vp(r, p)


@given(nonzero_rationals, small_primes)
def test_vp_matches_sympy_multiplicity(q, p):
    num = sympy.multiplicity(p, abs(q.numerator))
    den = sympy.multiplicity(p, q.denominator)
    assert vp(q, p) == num - den


def test_is_prime_matches_sympy():
    assert [n for n in range(200) if is_prime(n)] == list(sympy.primerange(0, 200))


@pytest.mark.parametrize("N, n, expected", [(100, 2, (10, True)), (8, 3, (2, True)), (7, 2, (2, False))])
def test_integer_nth_root_examples(N, n, expected):
    assert integer_nth_root(N, n) == expected


def test_integer_nth_root_domain():
    with pytest.raises(DomainError):
        integer_nth_root(8, 1)
    with pytest.raises(DomainError):
        integer_nth_root(-8, 3)


@given(st.integers(0, 10**60), st.integers(2, 40))
def test_integer_nth_root_is_floor(N, n):
    r, exact = integer_nth_root(N, n)
    assert r**n <= N < (r + 1) ** n
    assert exact == (r**n == N)


@given(st.integers(0, 10**9), st.integers(2, 12))
def test_integer_nth_root_exact_on_powers(y, n):
    assert integer_nth_root(y**n, n) == (y, True)


@given(st.integers(0, 10**30), st.integers(0, 10**30), st.integers(2, 9))
def test_integer_nth_root_monotone(a, b, n):
    lo, hi = sorted((a, b))
    assert integer_nth_root(lo, n)[0] <= integer_nth_root(hi, n)[0]


@pytest.mark.parametrize(
    "q, n, expected",
    [(Fraction(8, 27), 3, Fraction(2, 3)), (Fraction(1, 14), 2, None), (-4, 2, None), (-8, 3, -2), (0, 5, 0)],
)
def test_rational_nth_power_root_examples(q, n, expected):
    assert rational_nth_power_root(q, n) == expected


@given(nonzero_rationals, st.integers(2, 7))
def test_rational_root_round_trip(q, n):
    r = rational_nth_power_root(q, n)
    if r is not None:
        assert r**n == q
    # every exact power is recognized
    assert rational_nth_power_root(q**n, n) ** n == q**n


def test_format_and_parse():
    assert format_rational(Fraction(-5, 66)) == "-5/66"
    assert format_rational(3) == "3/1"
    assert parse_rational("-5/66") == Fraction(-5, 66)
    with pytest.raises(DomainError):
        parse_rational("1/0")
