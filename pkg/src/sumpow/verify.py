"""Invariant sweeps over (k, l, n) grids.

Each check returns a :class:`CheckResult`; an identity failure (including an
:class:`InvariantViolation` raised by a lower layer) is recorded as the
check's first counterexample rather than propagated.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Callable, Iterator, List, Optional

from sumpow.bernoulli import (
    bernoulli_number,
    bernoulli_polynomial,
    check_binom_bernoulli_identity,
    vsc_denominator,
)
from sumpow.classifier import (
    Verdict,
    classify,
    obstruction_case1,
    obstruction_case2,
    z_value,
)
from sumpow.errors import InvariantViolation
from sumpow.exactnum import rational_nth_power_root, vp
from sumpow.powersum import (
    build,
    degree1_coefficient,
    degree2_coefficient,
    direct_sum,
    top_coefficients,
)
from sumpow.rootstructure import (
    contradiction_identities,
    multiplicity_profile,
    two_root_hypothetical,
)
from sumpow.search import SolutionTriple, find_solutions


@dataclass
class CheckResult:
    name: str
    passed: bool
    cases: int
    counterexample: Optional[str] = None
    seconds: float = 0.0

    def to_dict(self) -> dict:
        return {
            "check": self.name,
            "passed": self.passed,
            "cases": self.cases,
            "counterexample": self.counterexample,
        }


class _Failure(Exception):
    pass


def _run(name: str, body: Callable[[], Iterator[None]]) -> CheckResult:
    cases = 0
    start = time.perf_counter()
    try:
        for _ in body():
            cases += 1
    except (_Failure, InvariantViolation) as exc:
        return CheckResult(name, False, cases, str(exc), time.perf_counter() - start)
    return CheckResult(name, True, cases, None, time.perf_counter() - start)


def _expect(cond: bool, msg: str) -> None:
    if not cond:
        raise _Failure(msg)


def _squarefree(n: int) -> bool:
    p = 2
    while p * p <= n:
        if n % (p * p) == 0:
            return False
        p += 1
    return True


# -- individual checks -----------------------------------------------------


def check_bernoulli(k_max: int = 60) -> CheckResult:
    def body():
        _expect(bernoulli_number(0) == 1, "B_0 != 1")
        _expect(bernoulli_number(1) == Fraction(-1, 2), "B_1 != -1/2")
        _expect(bernoulli_number(2) == Fraction(1, 6), "B_2 != 1/6")
        yield
        for k in range(3, k_max + 1, 2):
            _expect(bernoulli_number(k) == 0, f"B_{k} != 0")
            yield
        for k in range(2, k_max + 1, 2):
            b = bernoulli_number(k)
            _expect(b.denominator == vsc_denominator(k), f"denominator of B_{k} != vsc({k})")
            _expect(_squarefree(b.denominator), f"denominator of B_{k} not squarefree")
            _expect(vp(b, 2) == -1, f"v2(B_{k}) != -1")
            yield
        for k in range(2, k_max + 1):
            _expect(check_binom_bernoulli_identity(k), f"binomial identity fails at k={k}")
            yield
        for q in range(0, 31):
            _expect(bernoulli_polynomial(q)(0) == bernoulli_number(q), f"B_{q}(0) != B_{q}")
            yield

    return _run("bernoulli", body)


def check_oracle_equivalence(k_max: int, l_max: int, x_max: int = 10) -> CheckResult:
    def body():
        for k in range(1, k_max + 1):
            for l in range(2, l_max + 1):
                S = build((k, l)).S
                for x in range(1, x_max + 1):
                    _expect(S(x) == direct_sum((k, l), x), f"S(x) != direct sum at k={k}, l={l}, x={x}")
                    yield

    return _run("oracle_equivalence", body)


def check_coefficients(k_max: int, l_max: int) -> CheckResult:
    def body():
        for k in range(1, k_max + 1):
            for l in range(2, l_max + 1):
                H = build((k, l)).H
                _expect(H(0) == 0, f"H(0) != 0 at k={k}, l={l}")
                _expect(H.leading_coefficient == l ** (k + 1) - 1, f"leading coefficient at k={k}, l={l}")
                top_coefficients((k, l))
                if k % 2 == 0:
                    degree1_coefficient((k, l))
                elif k >= 3:
                    degree2_coefficient((k, l))
                yield

    return _run("coefficient_formulas", body)


def check_proposition1(k_max: int, l_max: int, l_identities: int = 100) -> CheckResult:
    def body():
        for k in range(2, k_max + 1):
            for l in range(2, l_max + 1):
                prof = multiplicity_profile((k, l))
                where = f"k={k}, l={l}"
                _expect(prof.distinct_count >= 3, f"fewer than three distinct roots at {where}")
                _expect(sum(prof.multiplicities) == k + 1, f"multiplicities do not sum to k+1 at {where}")
                _expect(prof.zero_multiplicity == (1 if k % 2 == 0 else 2), f"zero multiplicity parity at {where}")
                hyp = two_root_hypothetical((k, l))
                _expect(hyp.inequality_ok, f"(l^k-1)^2 > (l^(k-1)-1)(l^(k+1)-1) fails at {where}")
                _expect(hyp.interval_ok, f"r={hyp.r} outside (k-2, k) at {where}")
                yield
        _expect(contradiction_identities(max(l_identities, l_max)), "a two-root branch identity holds")
        yield

    return _run("proposition1", body)


def check_z_congruence(k_max: int = 99, l_max: int = 99) -> CheckResult:
    def body():
        for k in range(3, k_max + 1, 2):
            for l in range(3, l_max + 1, 2):
                zv = z_value(k, l)
                _expect(zv.congruence_ok, f"z-congruence fails at k={k}, l={l}")
                _expect(vp(zv.z, 2) == zv.e, f"v2(z) != e at k={k}, l={l}")
                yield

    return _run("z_congruence", body)


def check_obstructions(k_max: int, l_max: int, n_roots: int = 10) -> CheckResult:
    def body():
        for k in range(2, k_max + 1, 2):
            for l in range(2, l_max + 1):
                rep = obstruction_case1((k, l), 2)
                _expect(rep.v2 == -1 and rep.obstructed, f"case-1 target {rep.target} has v2={rep.v2} at k={k}, l={l}")
                for n in range(2, n_roots + 1):
                    _expect(rational_nth_power_root(rep.target, n) is None, f"case-1 target is a {n}-th power at k={k}, l={l}")
                yield
        for k in range(3, k_max + 1, 2):
            for l in range(3, l_max + 1, 2):
                rep = obstruction_case2((k, l), 2)
                _expect(rep.v2 == -1 and rep.obstructed, f"case-2 target {rep.target} has v2={rep.v2} at k={k}, l={l}")
                for n in range(2, n_roots + 1):
                    _expect(rational_nth_power_root(rep.target, n) is None, f"case-2 target is a {n}-th power at k={k}, l={l}")
                yield

    return _run("obstructions", body)


def check_classifier(k_max: int, l_max: int, n_max: int) -> CheckResult:
    def body():
        for k in range(2, k_max + 1):
            if k == 3:
                continue
            for l in range(2, l_max + 1):
                for n in range(2, n_max + 1):
                    rep = classify((k, l), n)
                    _expect(
                        rep.verdict is Verdict.FINITE_BY_BRINDZA,
                        f"classify(k={k}, l={l}, n={n}) = {rep.verdict.value}",
                    )
                    yield
        if l_max >= 2:
            rep = classify((3, 2), 2)
            _expect(
                rep.verdict is Verdict.EXCLUDED_K and rep.pattern is not None and rep.pattern.pattern == "B"
                and sorted(rep.t_values) == [1, 2, 2],
                "k=3, l=2, n=2 does not carry the pattern-B witness on t-values {1,2,2}",
            )
            yield

    return _run("classifier", body)


def _reverify(k: int, l: int, t: SolutionTriple) -> bool:
    total = 0
    for j in range(t.x + 1, l * t.x + 1):
        total += prod([j] * k)
    return t.n >= 2 and t.y >= 1 and total == prod([t.y] * t.n)


def check_search() -> CheckResult:
    expected = [
        ((2, 2), 10, [SolutionTriple(1, 2, 2), SolutionTriple(2, 5, 2)]),
        ((1, 2), 10, [SolutionTriple(8, 10, 2)]),
    ]

    def body():
        for (k, l), x_max, want in expected:
            got = find_solutions((k, l), x_max)
            _expect(got == want, f"find_solutions(k={k}, l={l}, x_max={x_max}) = {got}")
            for t in got:
                _expect(_reverify(k, l, t), f"{t} fails re-verification for k={k}, l={l}")
            yield
        got = find_solutions((3, 2), 1)
        _expect(SolutionTriple(1, 2, 3) in got, "(1, 2, 3) missing for k=3, l=2")
        for t in got:
            _expect(_reverify(3, 2, t), f"{t} fails re-verification for k=3, l=2")
        yield

    return _run("search", body)


def run_all(k_max: int, l_max: int, n_max: int = 50) -> List[CheckResult]:
    """The full invariant suite, in a fixed order."""
    return [
        check_bernoulli(max(60, k_max)),
        check_oracle_equivalence(k_max, l_max),
        check_coefficients(k_max, l_max),
        check_proposition1(k_max, l_max),
        check_z_congruence(max(99, k_max), max(99, l_max)),
        check_obstructions(k_max, l_max),
        check_classifier(k_max, l_max, n_max),
        check_search(),
    ]


__all__ = [
    "CheckResult",
    "check_bernoulli",
    "check_classifier",
    "check_coefficients",
    "check_obstructions",
    "check_oracle_equivalence",
    "check_proposition1",
    "check_search",
    "check_z_congruence",
    "run_all",
]
