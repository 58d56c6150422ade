"""Constants and configurable defaults used in the chainspec package."""

import os

from chainspec.chainspec_exceptions import InvalidInputError

# Absolute tolerance on sigma^2 and lambda comparisons in the verifiers.
TOLERANCE = 1e-9
# Tolerance for omega bounds compared against an eigensolver product.
OMEGA_TOLERANCE = 1e-7
# Eigenvalues above this count towards the numerical rank of a C-matrix.
RANK_TOLERANCE = 1e-8
# Maximum number of search nodes visited by an exhaustive matrix enumeration.
DEFAULT_BUDGET = 10**7
# Maximum number of entries of a materialized second compound matrix.
COMPOUND_SIZE_LIMIT = 10**6
# Significant digits of floats in machine-readable reports.
FLOAT_DIGITS = 15
# Environment variable that overrides DEFAULT_BUDGET.
BUDGET_ENV_VAR = 'CHAINSPEC_BUDGET'


def get_budget(budget=None):
    """Resolves the enumeration budget.

    Args:
        budget: An explicit budget. Optional; if None, the value of the
            ``CHAINSPEC_BUDGET`` environment variable is used, and if that is
            not set, ``DEFAULT_BUDGET``.

    Returns:
        A positive integer budget.

    Raises:
        InvalidInputError: Raised if the resolved budget is not a positive
            integer.
    """
    if budget is None:
        budget = os.environ.get(BUDGET_ENV_VAR)
        if budget is None:
            return DEFAULT_BUDGET
    try:
        value = int(budget)
    except (TypeError, ValueError):
        raise InvalidInputError(
            f'Budget must be a positive integer, got {budget!r}.')
    if value < 1 or str(value) != str(budget).strip():
        raise InvalidInputError(
            f'Budget must be a positive integer, got {budget!r}.')
    return value
