"""Root-multiplicity analysis of the power-sum polynomial.

Multiplicities come from an exact squarefree decomposition (Yun's
algorithm) run on integer coefficients; no numerical root finding is used.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import List, Tuple

from sumpow.errors import DomainError, ZeroDenominatorError
from sumpow.poly import RationalPolynomial
from sumpow.powersum import as_instance, build

# ---------------------------------------------------------------------------
# integer polynomial helpers: ascending coefficient lists, no trailing zeros

IntPoly = List[int]


def _trim(f: IntPoly) -> IntPoly:
    while f and f[-1] == 0:
        f.pop()
    return f


def _primitive(f: IntPoly) -> IntPoly:
    """Divide out the content and make the leading coefficient positive."""
    if not f:
        return f
    c = math.gcd(*f)
    if f[-1] < 0:
        c = -c
    return [a // c for a in f]


def _diff(f: IntPoly) -> IntPoly:
    return _trim([i * a for i, a in enumerate(f)][1:])


def _sub(f: IntPoly, g: IntPoly) -> IntPoly:
    n = max(len(f), len(g))
    f = f + [0] * (n - len(f))
    g = g + [0] * (n - len(g))
    return _trim([a - b for a, b in zip(f, g)])


def _prem(f: IntPoly, g: IntPoly) -> IntPoly:
    """Pseudo-remainder of ``f`` by ``g`` (stays in Z[x])."""
    r = list(f)
    dg = len(g) - 1
    lc = g[-1]
    while len(r) - 1 >= dg and r:
        shift = len(r) - 1 - dg
        top = r[-1]
        r = [a * lc for a in r]
        for j, b in enumerate(g):
            r[shift + j] -= top * b
        _trim(r)
    return r


def _gcd(f: IntPoly, g: IntPoly) -> IntPoly:
    """Primitive gcd in Z[x] by the primitive pseudo-remainder sequence."""
    a, b = _primitive(list(f)), _primitive(list(g))
    while b:
        a, b = b, _primitive(_prem(a, b))
    return a if a else [1]


def _exact_div(f: IntPoly, g: IntPoly) -> IntPoly:
    """``f / g`` where ``g`` is known to divide ``f`` in Z[x]."""
    r = list(f)
    dg = len(g) - 1
    q = [0] * (len(r) - dg)
    for i in range(len(r) - 1, dg - 1, -1):
        c, m = divmod(r[i], g[-1])
        if m:
            raise ArithmeticError("inexact polynomial division")
        q[i - dg] = c
        for j, b in enumerate(g):
            r[i - dg + j] -= c * b
    if any(r[:dg]):
        raise ArithmeticError("inexact polynomial division")
    return q


def _to_rational_monic(f: IntPoly) -> RationalPolynomial:
    return RationalPolynomial(f).monic()


# ---------------------------------------------------------------------------


def squarefree_decomposition(p: RationalPolynomial) -> List[Tuple[RationalPolynomial, int]]:
    """Return ``[(g_1, e_1), ...]`` with ``p = lc(p) * prod g_i**e_i``.

    Each ``g_i`` is monic, squarefree, of positive degree, and the ``g_i``
    are pairwise coprime; exponents are strictly increasing.

    >>> x = RationalPolynomial.x()
    >>> squarefree_decomposition((x - 1) ** 3)
    [(RationalPolynomial([-1/1, 1/1]), 3)]
    """
    if p.is_zero():
        raise DomainError("squarefree decomposition of the zero polynomial")
    f = _primitive(p.integer_coefficients())
    if len(f) == 1:
        return []
    out = []
    a = _gcd(f, _diff(f))
    b = _exact_div(f, a)
    c = _exact_div(_diff(f), a)
    d = _sub(c, _diff(b))
    i = 1
    while len(b) > 1:
        g = _gcd(b, d)
        b = _exact_div(b, g)
        c = _exact_div(d, g)
        d = _sub(c, _diff(b))
        if len(g) > 1:
            out.append((_to_rational_monic(g), i))
        i += 1
    return out


@dataclass(frozen=True)
class MultiplicityProfile:
    multiplicities: Tuple[int, ...]  # one per distinct complex root, descending
    distinct_count: int
    zero_multiplicity: int

    @property
    def simple_count(self) -> int:
        return sum(1 for r in self.multiplicities if r == 1)


def profile_of(p: RationalPolynomial) -> MultiplicityProfile:
    """Multiplicity profile of an arbitrary nonzero polynomial."""
    mults: List[int] = []
    zero = 0
    for factor, e in squarefree_decomposition(p):
        mults.extend([e] * factor.degree)
        if factor.coeff(0) == 0:
            zero = e
    mults.sort(reverse=True)
    return MultiplicityProfile(tuple(mults), len(mults), zero)


@lru_cache(maxsize=None)
def _profile(k: int, l: int) -> MultiplicityProfile:
    return profile_of(build((k, l)).H)


def multiplicity_profile(instance) -> MultiplicityProfile:
    """Multiplicities of the distinct roots of ``H`` for ``k >= 2``."""
    inst = as_instance(instance)
    if inst.k < 2:
        raise DomainError(f"k must be >= 2, got {inst.k}")
    return _profile(inst.k, inst.l)


def has_three_distinct_roots(instance) -> bool:
    return multiplicity_profile(instance).distinct_count >= 3


@dataclass(frozen=True)
class TwoRootHypothetical:
    r: Fraction
    interval_ok: bool
    inequality_ok: bool


def two_root_hypothetical(instance) -> TwoRootHypothetical:
    """Evaluate the zero multiplicity ``r`` that a two-root ``H`` would force.

    If ``H / (l^(k+1)-1) = x^r (x + a)^(k+1-r)``, matching the ``x^k`` and
    ``x^(k-1)`` coefficients gives

        r = k (1 - 2 P Q / (3(k+1) M^2 - 2k P Q)),

    with ``P = l^(k-1)-1``, ``M = l^k-1``, ``Q = l^(k+1)-1``. The strict
    inequality ``M^2 > P Q`` confines ``r`` to the open interval ``(k-2, k)``.
    """
    inst = as_instance(instance)
    k, l = inst.k, inst.l
    if k < 2:
        raise DomainError(f"k must be >= 2, got {k}")
    P = l ** (k - 1) - 1
    M = l**k - 1
    Q = l ** (k + 1) - 1
    den = 3 * (k + 1) * M * M - 2 * k * P * Q
    if den == 0:
        raise ZeroDenominatorError(f"two-root formula has a zero denominator at k={k}, l={l}")
    r = k * (1 - Fraction(2 * P * Q, den))
    return TwoRootHypothetical(
        r=r,
        interval_ok=k - 2 < r < k,
        inequality_ok=M * M > P * Q,
    )


def contradiction_identities(l_max: int) -> bool:
    """Check that neither two-root branch can hold for any ``2 <= l <= l_max``.

    Both the identities as usually quoted and the ones obtained by clearing
    ``(l-1)^2`` exactly from the two-root formula are checked.
    """
    if l_max < 2:
        raise DomainError(f"l_max must be >= 2, got {l_max}")
    for l in range(2, l_max + 1):
        a = l * l + l + 1
        if 8 * a == 9 * (l + 1) ** 2:
            return False
        if (l + 1) * (l * l + 1) == a * a:
            return False
        if (l + 1) ** 2 * (l * l + 1) == a * a:
            return False
    return True


__all__ = [
    "MultiplicityProfile",
    "TwoRootHypothetical",
    "contradiction_identities",
    "has_three_distinct_roots",
    "multiplicity_profile",
    "profile_of",
    "squarefree_decomposition",
    "two_root_hypothetical",
]
