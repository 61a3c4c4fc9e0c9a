"""Finiteness decision procedures for the power-sum equation.

``classify`` computes the true multiplicity profile of ``H`` and checks the
two exceptional t-value shapes directly. When a shape is exceptional it
falls back on the 2-adic obstruction that rules out ``H`` being
``x`` (or ``x^2``) times a constant times a perfect power.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import comb, gcd
from typing import Optional, Sequence, Tuple

from sumpow.bernoulli import bernoulli_number
from sumpow.errors import DelegatedEvenL, DomainError, InvariantViolation
from sumpow.exactnum import format_rational, rational_nth_power_root, vp
from sumpow.powersum import ProblemInstance, as_instance
from sumpow.rootstructure import MultiplicityProfile, multiplicity_profile


class Verdict(str, Enum):
    FINITE_BY_BRINDZA = "FiniteByBrindza"
    EXCLUDED_K = "ExcludedK"
    DELEGATED_EVEN_L = "DelegatedEvenL"
    UNRESOLVED = "Unresolved"


class ProofCase(str, Enum):
    CASE_1I = "Case1i"
    CASE_1II = "Case1ii"
    CASE_2I = "Case2i"
    CASE_2II_N3 = "Case2ii_n3"
    CASE_2II_N4 = "Case2ii_n4"
    CASE_2II_NBIG = "Case2ii_nBig"


class STStatus(str, Enum):
    BOUNDED_N = "BoundedN"
    FINITE_ABOVE_N1 = "FinitelyManyAboveN1"
    FINITE_ABOVE_N2 = "FinitelyManyAboveN2"
    NOT_APPLICABLE = "NotApplicable"


TValues = Tuple[int, ...]


def t_values(profile: MultiplicityProfile, n: int) -> TValues:
    """``t_i = n / gcd(n, r_i)``, in the order of ``profile.multiplicities``."""
    if n < 2:
        raise DomainError(f"n must be >= 2, got {n}")
    if not profile.multiplicities:
        raise DomainError("empty multiplicity profile")
    return tuple(n // gcd(n, r) for r in profile.multiplicities)


@dataclass(frozen=True)
class PatternVerdict:
    forbidden: bool
    pattern: Optional[str] = None  # "A" or "B"
    t: Optional[int] = None  # parameter of pattern A

    @property
    def tag(self) -> Optional[str]:
        if self.pattern == "A":
            return f"A({self.t})"
        return self.pattern


def pattern_check(ts: Sequence[int]) -> PatternVerdict:
    """Match ``ts`` (as a multiset) against ``{t, 1, ..., 1}`` and ``{2, 2, 1, ..., 1}``.

    The all-ones multiset counts as pattern A with ``t = 1``.
    """
    if not ts:
        raise DomainError("empty t-value multiset")
    big = [t for t in ts if t != 1]
    if len(big) <= 1:
        return PatternVerdict(True, "A", big[0] if big else 1)
    if len(big) == 2 and big == [2, 2]:
        return PatternVerdict(True, "B")
    return PatternVerdict(False)


def schinzel_tijdeman_status(profile: MultiplicityProfile) -> STStatus:
    if profile.distinct_count < 2:
        return STStatus.NOT_APPLICABLE
    simple = profile.simple_count
    if simple >= 3:
        return STStatus.FINITE_ABOVE_N1
    if simple == 2:
        return STStatus.FINITE_ABOVE_N2
    return STStatus.BOUNDED_N


@dataclass(frozen=True)
class ObstructionReport:
    target: Fraction
    v2: int
    obstructed: bool
    detail: str

    def to_dict(self) -> dict:
        return {
            "target": format_rational(self.target),
            "v2": self.v2,
            "obstructed": self.obstructed,
            "detail": self.detail,
        }


def _check_no_root(target: Fraction, n: int) -> None:
    if rational_nth_power_root(target, n) is not None:
        raise InvariantViolation(f"{target} is an exact {n}-th power despite v2 = -1")


def obstruction_case1(instance, n: int) -> ObstructionReport:
    """Even ``k``: the constant term that ``f(x)^n`` would need, and its 2-adic valuation.

    If ``H/x = (l^(k+1)-1) f(x)^n`` then ``f(0)^n = (k+1)(l-1)B_k / (l^(k+1)-1)``,
    which has ``v_2 = -1`` and so is never an ``n``-th power.
    """
    inst = as_instance(instance)
    k, l = inst.k, inst.l
    if k < 2 or k % 2:
        raise DomainError(f"k must be even and >= 2, got {k}")
    if n < 2:
        raise DomainError(f"n must be >= 2, got {n}")
    if vp(l ** (k + 1) - 1, 2) != vp(l - 1, 2):
        raise InvariantViolation(f"v2(l^(k+1)-1) != v2(l-1) at k={k}, l={l}")
    target = Fraction((k + 1) * (l - 1), l ** (k + 1) - 1) * bernoulli_number(k)
    v2 = vp(target, 2)
    obstructed = v2 == -1
    if obstructed:
        _check_no_root(target, n)
    return ObstructionReport(target, v2, obstructed, ProofCase.CASE_1II.value)


@dataclass(frozen=True)
class ZValue:
    z: int
    e: int
    congruence_ok: bool


def z_value(k: int, l: int) -> ZValue:
    """``z = 1 + l^2 + ... + l^(k-1)`` with ``e = v_2((k+1)/2)``.

    ``congruence_ok`` records ``z == (k+1)/2 (mod 2^(e+1))``, which pins
    ``v_2(z) = e``.
    """
    if k < 3 or k % 2 == 0:
        raise DomainError(f"k must be odd and >= 3, got {k}")
    if l < 3 or l % 2 == 0:
        raise DomainError(f"l must be odd and >= 3, got {l}")
    half = (k + 1) // 2
    z = sum(l ** (2 * i) for i in range(half))
    e = vp(half, 2)
    mod = 1 << (e + 1)
    return ZValue(z, e, (z - half) % mod == 0)


def obstruction_case2(instance, n: int, detail: str = ProofCase.CASE_2I.value) -> ObstructionReport:
    """Odd ``k``, odd ``l``: 2-adic valuation of ``C(k+1,2)(l^2-1)/(l^(k+1)-1) B_(k-1)``.

    Raises :class:`DelegatedEvenL` for even ``l``.
    """
    inst = as_instance(instance)
    k, l = inst.k, inst.l
    if k < 3 or k % 2 == 0:
        raise DomainError(f"k must be odd and >= 3, got {k}")
    if n < 2:
        raise DomainError(f"n must be >= 2, got {n}")
    if l % 2 == 0:
        raise DelegatedEvenL(f"l={l} is even")
    zv = z_value(k, l)
    if not zv.congruence_ok or vp(zv.z, 2) != zv.e:
        raise InvariantViolation(f"z-congruence fails at k={k}, l={l}")
    if zv.z * (l * l - 1) != l ** (k + 1) - 1:
        raise InvariantViolation(f"geometric sum identity fails at k={k}, l={l}")
    target = Fraction(comb(k + 1, 2), zv.z) * bernoulli_number(k - 1)
    v2 = vp(target, 2)
    obstructed = v2 == -1
    if obstructed:
        _check_no_root(target, n)
    return ObstructionReport(target, v2, obstructed, detail)


@dataclass(frozen=True)
class ClassificationReport:
    instance: ProblemInstance
    n: int
    verdict: Verdict
    proof_case: Optional[ProofCase]
    profile: Optional[MultiplicityProfile] = None
    t_values: Optional[TValues] = None
    pattern: Optional[PatternVerdict] = None
    obstruction: Optional[ObstructionReport] = None
    notes: Tuple[str, ...] = field(default=())

    def to_dict(self) -> dict:
        prof = self.profile
        return {
            "k": self.instance.k,
            "l": self.instance.l,
            "n": self.n,
            "verdict": self.verdict.value,
            "proof_case": self.proof_case.value if self.proof_case else None,
            "multiplicities": list(prof.multiplicities) if prof else None,
            "zero_multiplicity": prof.zero_multiplicity if prof else None,
            "t_values": list(self.t_values) if self.t_values is not None else None,
            "pattern": self.pattern.tag if self.pattern else None,
            "obstruction": self.obstruction.to_dict() if self.obstruction else None,
            "notes": list(self.notes),
        }


def proof_case_for(k: int, n: int) -> ProofCase:
    if k % 2 == 0:
        return ProofCase.CASE_1II if k % n == 0 else ProofCase.CASE_1I
    if (k - 1) % n == 0:
        return ProofCase.CASE_2I
    if n == 3:
        return ProofCase.CASE_2II_N3
    if n == 4:
        return ProofCase.CASE_2II_N4
    return ProofCase.CASE_2II_NBIG


def classify(instance, n: int) -> ClassificationReport:
    """Classify ``(k, l, n)`` following the even/odd-``k`` case split."""
    inst = as_instance(instance)
    k = inst.k
    if n < 2:
        raise DomainError(f"n must be >= 2, got {n}")

    if k == 1:
        # H = x((l^2-1)x + (l-1)) has the zero root simple even though k is odd,
        # so no profile is recorded here
        return ClassificationReport(inst, n, Verdict.EXCLUDED_K, None, notes=("k=1 excluded",))

    profile = multiplicity_profile(inst)
    ts = t_values(profile, n)
    pv = pattern_check(ts)
    case = proof_case_for(k, n)
    report = dict(instance=inst, n=n, proof_case=case, profile=profile, t_values=ts, pattern=pv)

    if k == 3:
        return ClassificationReport(verdict=Verdict.EXCLUDED_K, notes=("k=3 excluded",), **report)

    # the 2-adic argument for this case is attached as a witness whenever it applies
    obs = None
    delegated = False
    if case is ProofCase.CASE_1II:
        obs = obstruction_case1(inst, n)
    elif case in (ProofCase.CASE_2I, ProofCase.CASE_2II_N4):
        exponent = 2 if case is ProofCase.CASE_2II_N4 else n
        try:
            obs = obstruction_case2(inst, exponent, detail=case.value)
        except DelegatedEvenL:
            delegated = True
    report["obstruction"] = obs

    if not pv.forbidden:
        notes = ("even l: resolved by the direct profile check",) if delegated else ()
        return ClassificationReport(verdict=Verdict.FINITE_BY_BRINDZA, notes=notes, **report)
    if obs is not None and obs.obstructed:
        return ClassificationReport(verdict=Verdict.FINITE_BY_BRINDZA, **report)
    if delegated:
        return ClassificationReport(
            verdict=Verdict.DELEGATED_EVEN_L, notes=("even l on the 2-adic path",), **report
        )
    return ClassificationReport(
        verdict=Verdict.UNRESOLVED, notes=("exceptional t-values without an obstruction",), **report
    )
