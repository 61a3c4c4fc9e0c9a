"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain of an operation."""


class UndefinedValuationError(DomainError):
    """The p-adic valuation of zero was requested."""


class ZeroDenominatorError(ArithmeticError):
    """A closed-form expression hit a zero denominator."""


class DelegatedEvenL(Exception):
    """The 2-adic argument needs an odd multiplier; even multipliers are handled elsewhere."""


class InvariantViolation(AssertionError):
    """A mathematical identity that must always hold was found to fail."""
