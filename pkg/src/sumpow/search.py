"""Brute-force search for solutions (x, y, n) inside a finite box."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from typing import List, NamedTuple, Optional

from sumpow.errors import DomainError, InvariantViolation
from sumpow.exactnum import integer_nth_root
from sumpow.powersum import ProblemInstance, as_instance, build, direct_sum


class SolutionTriple(NamedTuple):
    x: int
    y: int
    n: int


def _scan(k: int, l: int, x_lo: int, x_hi: int, n_max: Optional[int]) -> List[SolutionTriple]:
    inst = ProblemInstance(k, l)
    out = []
    N = direct_sum(inst, x_lo)
    for x in range(x_lo, x_hi + 1):
        if x > x_lo:
            # window (x-1, l(x-1)] -> (x, lx]
            N += sum(j**k for j in range(l * (x - 1) + 1, l * x + 1)) - x**k
        if N < 2:
            # the sum contains (l*x)^k >= 2
            raise InvariantViolation(f"sum {N} < 2 at x={x}")
        top = N.bit_length() - 1  # floor(log2 N): y >= 2 forces n <= this
        if n_max is not None:
            top = min(top, n_max)
        for n in range(2, top + 1):
            y, exact = integer_nth_root(N, n)
            if exact:
                out.append(SolutionTriple(x, y, n))
    return out


def find_solutions(
    instance,
    x_max: int,
    n_max: Optional[int] = None,
    workers: int = 1,
) -> List[SolutionTriple]:
    """All ``(x, y, n)`` with ``1 <= x <= x_max`` (and ``n <= n_max``) solving the equation.

    The sum for each ``x`` equals :func:`direct_sum`; it is seeded literally at
    the start of each x-range and then advanced term by term.

    Every exponent is reported: a sum equal to ``2**6`` yields triples for
    ``n = 2, 3, 6``. With ``workers > 1`` the x-range is split across
    processes; the merged output is identical to the sequential one.
    """
    inst = as_instance(instance)
    if x_max < 1:
        raise DomainError(f"x_max must be >= 1, got {x_max}")
    if n_max is not None and n_max < 2:
        raise DomainError(f"n_max must be >= 2, got {n_max}")
    if workers <= 1 or x_max < 2 * workers:
        found = _scan(inst.k, inst.l, 1, x_max, n_max)
    else:
        step = -(-x_max // (4 * workers))
        chunks = [(lo, min(lo + step - 1, x_max)) for lo in range(1, x_max + 1, step)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = pool.map(
                _scan,
                *zip(*[(inst.k, inst.l, lo, hi, n_max) for lo, hi in chunks]),
            )
            found = [t for part in parts for t in part]
    return sorted(found, key=lambda t: (t.x, t.n))


def cross_check_polynomial(instance, x_max: int) -> bool:
    """True iff the Bernoulli-built ``S(x)`` matches literal summation on ``1..x_max``."""
    inst = as_instance(instance)
    if x_max < 1:
        raise DomainError(f"x_max must be >= 1, got {x_max}")
    S = build(inst).S
    return all(S(x) == direct_sum(inst, x) for x in range(1, x_max + 1))
