"""Dense univariate polynomials with exact rational coefficients."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Tuple, Union

from sumpow.errors import DomainError
from sumpow.exactnum import format_rational

Scalar = Union[int, Fraction]


def _strip(coeffs: Iterable[Scalar]) -> Tuple[Fraction, ...]:
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


class RationalPolynomial:
    """Immutable polynomial; ``coefficients[i]`` multiplies ``x**i``.

    The zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("_c",)

    def __init__(self, coefficients: Iterable[Scalar] = ()):
        self._c = _strip(coefficients)

    @classmethod
    def constant(cls, c: Scalar) -> "RationalPolynomial":
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, c: Scalar = 1) -> "RationalPolynomial":
        return cls([0] * degree + [c])

    @classmethod
    def x(cls) -> "RationalPolynomial":
        return cls((0, 1))

    @property
    def coefficients(self) -> Tuple[Fraction, ...]:
        return self._c

    @property
    def degree(self) -> int:
        return len(self._c) - 1

    @property
    def leading_coefficient(self) -> Fraction:
        return self._c[-1] if self._c else Fraction(0)

    def is_zero(self) -> bool:
        return not self._c

    def coeff(self, i: int) -> Fraction:
        return self._c[i] if 0 <= i < len(self._c) else Fraction(0)

    def __call__(self, x: Scalar) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self._c):
            acc = acc * x + c
        return acc

    # -- arithmetic -------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "RationalPolynomial":
        if isinstance(other, RationalPolynomial):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return RationalPolynomial.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self._c), len(other._c))
        return RationalPolynomial(self.coeff(i) + other.coeff(i) for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return RationalPolynomial(-c for c in self._c)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.is_zero() or other.is_zero():
            return RationalPolynomial()
        out = [Fraction(0)] * (len(self._c) + len(other._c) - 1)
        for i, a in enumerate(self._c):
            if a:
                for j, b in enumerate(other._c):
                    out[i + j] += a * b
        return RationalPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise DomainError("negative polynomial power")
        result = RationalPolynomial.constant(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other: "RationalPolynomial"):
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self._c)
        dq = other.degree
        lc = other.leading_coefficient
        if len(rem) - 1 < dq:
            return RationalPolynomial(), self
        quot = [Fraction(0)] * (len(rem) - dq)
        for i in range(len(rem) - 1, dq - 1, -1):
            c = rem[i] / lc
            quot[i - dq] = c
            if c:
                for j, b in enumerate(other._c):
                    rem[i - dq + j] -= c * b
        return RationalPolynomial(quot), RationalPolynomial(rem[:dq])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._c == other._c

    def __hash__(self):
        return hash(self._c)

    # -- calculus / transforms -------------------------------------------

    def derivative(self) -> "RationalPolynomial":
        return RationalPolynomial(i * c for i, c in enumerate(self._c) if i)

    def monic(self) -> "RationalPolynomial":
        if self.is_zero():
            raise DomainError("the zero polynomial has no monic form")
        lc = self.leading_coefficient
        return RationalPolynomial(c / lc for c in self._c)

    def compose_affine(self, a: Scalar, b: Scalar) -> "RationalPolynomial":
        """Return ``p(a*x + b)``, by Horner's rule on the affine argument."""
        arg = RationalPolynomial((b, a))
        acc = RationalPolynomial()
        for c in reversed(self._c):
            acc = acc * arg + c
        return acc

    def denominator_lcm(self) -> int:
        return math.lcm(1, *(c.denominator for c in self._c))

    def integer_coefficients(self) -> list:
        """Coefficients scaled by the lcm of their denominators (all ints)."""
        m = self.denominator_lcm()
        return [int(c * m) for c in self._c]

    # -- display ----------------------------------------------------------

    def __repr__(self) -> str:
        return f"RationalPolynomial([{', '.join(format_rational(c) for c in self._c)}])"

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self._c[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = str(abs(c)) + (f"*{mono}" if mono else "")
            terms.append(("- " if c < 0 else "+ ") + body)
        s = " ".join(terms)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]

