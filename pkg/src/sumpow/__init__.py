"""Exact machinery for the power-sum equation (x+1)^k + ... + (lx)^k = y^n."""

from sumpow.bernoulli import bernoulli_number, bernoulli_polynomial, vsc_denominator
from sumpow.classifier import classify
from sumpow.errors import DomainError, InvariantViolation
from sumpow.exactnum import integer_nth_root, rational_nth_power_root, vp
from sumpow.poly import RationalPolynomial
from sumpow.powersum import ProblemInstance, build, direct_sum
from sumpow.rootstructure import multiplicity_profile, squarefree_decomposition
from sumpow.search import SolutionTriple, find_solutions

__version__ = "0.1.0"

__all__ = [
    "DomainError",
    "InvariantViolation",
    "ProblemInstance",
    "RationalPolynomial",
    "SolutionTriple",
    "bernoulli_number",
    "bernoulli_polynomial",
    "build",
    "classify",
    "direct_sum",
    "find_solutions",
    "integer_nth_root",
    "multiplicity_profile",
    "rational_nth_power_root",
    "squarefree_decomposition",
    "vp",
    "vsc_denominator",
]
