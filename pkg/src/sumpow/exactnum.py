"""Exact integer and rational primitives.

Rationals are :class:`fractions.Fraction`, which already keeps values in
lowest terms with a strictly positive denominator (zero is ``0/1``).
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Optional, Tuple, Union

from sumpow.errors import DomainError, UndefinedValuationError

ExactRational = Fraction
RationalLike = Union[int, Fraction]


def as_rational(value: RationalLike) -> Fraction:
    if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
        raise DomainError(f"expected an int or Fraction, got {type(value).__name__}")
    return Fraction(value)


def format_rational(q: RationalLike) -> str:
    """Render ``q`` as ``"num/den"``; integers keep the ``/1``."""
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    num, sep, den = text.partition("/")
    try:
        return Fraction(int(num), int(den)) if sep else Fraction(int(num))
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"not a rational of the form num/den: {text!r}") from exc


def is_prime(p: int) -> bool:
    # trial division; p is expected to be small (typically 2)
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    for d in range(3, math.isqrt(p) + 1, 2):
        if p % d == 0:
            return False
    return True


def _vp_int(n: int, p: int) -> int:
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def vp(q: RationalLike, p: int) -> int:
    """p-adic valuation of a nonzero rational.

    Returns the unique ``v`` with ``q = p**v * u / w`` where ``p`` divides
    neither ``u`` nor ``w``.

    >>> vp(Fraction(1, 6), 2)
    -1
    >>> vp(8, 2)
    3
    """
    q = as_rational(q)
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    if q == 0:
        raise UndefinedValuationError("valuation of 0 is undefined")
    return _vp_int(q.numerator, p) - _vp_int(q.denominator, p)


def integer_nth_root(N: int, n: int) -> Tuple[int, bool]:
    """Return ``(floor(N ** (1/n)), exact)`` for ``N >= 0`` and ``n >= 2``."""
    if n < 2:
        raise DomainError(f"root index must be >= 2, got {n}")
    if N < 0:
        raise DomainError(f"radicand must be >= 0, got {N}")
    if N < 2:
        return N, True
    if n == 2:
        r = math.isqrt(N)
        return r, r * r == N
    if n >= N.bit_length():
        # 2**n > N, so the root is 1
        return 1, N == 1
    # Newton iteration from above; the sequence decreases to the floor root
    x = 1 << -(-N.bit_length() // n)
    while True:
        y = ((n - 1) * x + N // x ** (n - 1)) // n
        if y >= x:
            break
        x = y
    return x, x**n == N


def rational_nth_power_root(q: RationalLike, n: int) -> Optional[Fraction]:
    """Return the rational ``r`` with ``r**n == q``, or ``None`` if there is none."""
    q = as_rational(q)
    if n < 2:
        raise DomainError(f"root index must be >= 2, got {n}")
    if q < 0 and n % 2 == 0:
        return None
    num_root, num_exact = integer_nth_root(abs(q.numerator), n)
    if not num_exact:
        return None
    den_root, den_exact = integer_nth_root(q.denominator, n)
    if not den_exact:
        return None
    sign = -1 if q < 0 else 1
    return Fraction(sign * num_root, den_root)
