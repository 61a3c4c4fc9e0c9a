"""Bernoulli numbers, Bernoulli polynomials and the von Staudt-Clausen denominator.

Convention: ``B_1 = -1/2``, so that ``B_q(x) = x^q - (q/2) x^(q-1) + ...``.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from math import comb
from typing import List

from sumpow.errors import DomainError
from sumpow.exactnum import is_prime
from sumpow.poly import RationalPolynomial


class BernoulliTable:
    """Memoized ``B_0, B_1, ...`` grown on demand by the binomial recurrence

        sum_{j=0}^{m} C(m+1, j) B_j = 0    (m >= 1),  B_0 = 1.

    Reads are lock-free; extension is serialized so concurrent callers see
    the same values an uncached computation would produce.
    """

    def __init__(self) -> None:
        self._values: List[Fraction] = [Fraction(1)]
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return len(self._values)

    @property
    def values(self) -> tuple:
        return tuple(self._values)

    def extend_to(self, i: int) -> None:
        if i < len(self._values):
            return
        with self._lock:
            vals = list(self._values)
            for m in range(len(vals), i + 1):
                s = sum(comb(m + 1, j) * vals[j] for j in range(m))
                vals.append(-s / (m + 1))
            self._values = vals

    def __getitem__(self, i: int) -> Fraction:
        if i < 0:
            raise DomainError(f"Bernoulli index must be >= 0, got {i}")
        self.extend_to(i)
        return self._values[i]


def table_invariants_hold(values) -> bool:
    """``B_0 = 1``, ``B_1 = -1/2`` and ``B_i = 0`` for odd ``i >= 3``."""
    if len(values) < 2 or values[0] != 1 or values[1] != Fraction(-1, 2):
        return False
    return all(values[i] == 0 for i in range(3, len(values), 2))


_TABLE = BernoulliTable()


def bernoulli_number(i: int) -> Fraction:
    """Return ``B_i`` exactly.

    >>> bernoulli_number(10)
    Fraction(5, 66)
    """
    return _TABLE[i]


def bernoulli_polynomial(q: int) -> RationalPolynomial:
    """``B_q(x) = sum_i C(q, i) B_i x^(q-i)``, monic of degree ``q``."""
    if q < 0:
        raise DomainError(f"degree must be >= 0, got {q}")
    coeffs = [Fraction(0)] * (q + 1)
    for i in range(q + 1):
        coeffs[q - i] = comb(q, i) * bernoulli_number(i)
    return RationalPolynomial(coeffs)


def vsc_denominator(k: int) -> int:
    """Product of the primes ``p`` with ``(p - 1) | k``, for even ``k >= 2``.

    By von Staudt-Clausen this is the denominator of ``B_k``; it is computed
    here from divisors of ``k`` only, so it can serve as a cross-check on the
    recurrence.
    """
    if k < 2 or k % 2:
        raise DomainError(f"k must be even and >= 2, got {k}")
    out = 1
    for d in range(1, k + 1):
        if k % d == 0 and is_prime(d + 1):
            out *= d + 1
    return out


def check_binom_bernoulli_identity(k: int) -> bool:
    """Self-test: ``sum_{i=0}^{k-1} C(k, i) B_i == 0``."""
    if k < 2:
        raise DomainError(f"k must be >= 2, got {k}")
    return sum(comb(k, i) * bernoulli_number(i) for i in range(k)) == 0
