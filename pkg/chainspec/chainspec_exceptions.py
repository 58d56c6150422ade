"""Provides the custom exceptions raised by the chainspec package."""


class ChainSpecError(Exception):
    """Base class for errors raised by chainspec."""


class InvalidInputError(ChainSpecError, ValueError):
    """Raise for malformed degree sequences, matrices or parameters."""


class OutOfHypothesisError(InvalidInputError):
    """Raise when parameters fall outside the hypotheses of the closed
        form being evaluated."""


class EmptyFeasibleError(InvalidInputError):
    """Raise when a search space or candidate set has no feasible element."""


class NumericDomainError(ChainSpecError, ArithmeticError):
    """Raise when a closed form would take the square root of a negative
        number, which signals an inconsistent pair of inputs."""


class ResourceLimitError(ChainSpecError):
    """Raise when an exhaustive enumeration exceeds its budget."""


class VerificationError(ChainSpecError):
    """Raise when an exhaustive check backing a closed form fails."""
