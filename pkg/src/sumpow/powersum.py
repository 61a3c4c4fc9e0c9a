"""The power-sum polynomial (x+1)^k + (x+2)^k + ... + (lx)^k.

Two normalizations are kept side by side:

* ``S`` is the true sum, so ``S(x)`` equals the integer sum for ``x >= 1``;
* ``H = (k+1) * S`` is the Bernoulli-difference form whose leading
  coefficients are ``l^(k+1) - 1``, ``(k+1)(l^k - 1)/2``, ... .

Both have the same roots and multiplicities. Root analysis uses ``H``;
searching uses ``S``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Tuple

from sumpow.bernoulli import bernoulli_number, bernoulli_polynomial
from sumpow.errors import DomainError, InvariantViolation
from sumpow.poly import RationalPolynomial


@dataclass(frozen=True)
class ProblemInstance:
    k: int
    l: int  # noqa: E741 -- the multiplier of the last term, l*x

    def __post_init__(self):
        if self.k < 1:
            raise DomainError(f"k must be >= 1, got {self.k}")
        if self.l < 2:
            raise DomainError(f"l must be >= 2, got {self.l}")


@dataclass(frozen=True)
class PowerSumPolynomial:
    instance: ProblemInstance
    S: RationalPolynomial
    H: RationalPolynomial


def as_instance(instance) -> ProblemInstance:
    if isinstance(instance, ProblemInstance):
        return instance
    k, l = instance
    return ProblemInstance(k, l)


@lru_cache(maxsize=None)
def _build(k: int, l: int) -> PowerSumPolynomial:
    inst = ProblemInstance(k, l)
    b = bernoulli_polynomial(k + 1)
    H = b.compose_affine(l, 1) - b.compose_affine(1, 1)
    S = H * Fraction(1, k + 1)
    if H.degree != k + 1 or H.leading_coefficient != l ** (k + 1) - 1 or H.coeff(0) != 0:
        raise InvariantViolation(f"malformed power-sum polynomial for k={k}, l={l}")
    return PowerSumPolynomial(inst, S, H)


def build(instance) -> PowerSumPolynomial:
    """Build ``S`` and ``H`` for ``instance`` (a ProblemInstance or ``(k, l)``)."""
    inst = as_instance(instance)
    return _build(inst.k, inst.l)


def top_coefficients(instance) -> Tuple[Fraction, Fraction, Fraction]:
    """Closed forms of the coefficients of ``x^(k+1)``, ``x^k``, ``x^(k-1)`` in ``H``.

    Each is checked against the built polynomial. At ``k = 1`` the third
    closed form is the (zero) constant term.
    """
    inst = as_instance(instance)
    k, l = inst.k, inst.l
    closed = (
        Fraction(l ** (k + 1) - 1),
        Fraction((k + 1) * (l**k - 1), 2),
        Fraction((k + 1) * k * (l ** (k - 1) - 1), 12),
    )
    H = build(inst).H
    extracted = (H.coeff(k + 1), H.coeff(k), H.coeff(k - 1))
    if closed != extracted:
        raise InvariantViolation(f"top coefficients {closed} != {extracted} for k={k}, l={l}")
    return closed


def degree1_coefficient(instance) -> Fraction:
    """Coefficient of ``x`` in ``H`` for even ``k``: ``(k+1)(l-1)B_k``, nonzero."""
    inst = as_instance(instance)
    k, l = inst.k, inst.l
    if k < 2 or k % 2:
        raise DomainError(f"k must be even and >= 2, got {k}")
    value = (k + 1) * (l - 1) * bernoulli_number(k)
    if value == 0 or build(inst).H.coeff(1) != value:
        raise InvariantViolation(f"degree-1 coefficient mismatch for k={k}, l={l}")
    return value


def degree2_coefficient(instance) -> Fraction:
    """Coefficient of ``x^2`` in ``H`` for odd ``k``: ``C(k+1, 2)(l^2-1)B_(k-1)``, nonzero."""
    inst = as_instance(instance)
    k, l = inst.k, inst.l
    if k < 3 or k % 2 == 0:
        raise DomainError(f"k must be odd and >= 3, got {k}")
    value = comb(k + 1, 2) * (l * l - 1) * bernoulli_number(k - 1)
    if value == 0 or build(inst).H.coeff(2) != value:
        raise InvariantViolation(f"degree-2 coefficient mismatch for k={k}, l={l}")
    return value


def direct_sum(instance, x: int) -> int:
    """Literal ``sum_{j=x+1}^{l*x} j^k``; independent of the Bernoulli route."""
    inst = as_instance(instance)
    if x < 1:
        raise DomainError(f"x must be >= 1, got {x}")
    k = inst.k
    return sum(j**k for j in range(x + 1, inst.l * x + 1))
