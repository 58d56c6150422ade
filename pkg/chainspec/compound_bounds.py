"""Second compound matrices and the omega lower bounds on sigma_1^2 sigma_2^2.

For a chain graph with Ferrers profile (r, m) the 2 x 2 minors of its
representation matrix are 0 or -1. Counting them gives rational lower bounds
omega, omega' and omega* = max(omega, omega') on sigma_1^2 sigma_2^2, and
therefore the upper bound

    lambda_max^2 <= (e + sqrt(e^2 - 4 omega*)) / 2,

which is exact when the profile has two distinct degrees.
"""

import collections
import itertools
import math
import warnings
from fractions import Fraction

import numpy as np

from chainspec import constants
from chainspec.bipartite_core import (as_degrees, as_matrix,
                                      chain_from_degrees, conjugate_profile,
                                      ferrers_profile)
from chainspec.chainspec_exceptions import (InvalidInputError,
                                            NumericDomainError,
                                            ResourceLimitError)
from chainspec.spectra import sigma_pair

OmegaBounds = collections.namedtuple(
    'OmegaBounds', ('omega', 'omega_prime', 'omega_star', 'h'))

ChainBound = collections.namedtuple(
    'ChainBound', ('degrees', 'e', 'omega', 'omega_prime', 'omega_star',
                   'upper_bound', 'lambda_sq', 'slack'))


def second_compound(matrix, size_limit=constants.COMPOUND_SIZE_LIMIT):
    """Computes the second compound matrix of a 0-1 matrix.

    The entry in row (i1, i2) and column (j1, j2) is the minor
    A[i1, j1] A[i2, j2] - A[i1, j2] A[i2, j1]. Pairs are in lexicographic
    order.

    Args:
        matrix: An m x n 0-1 matrix with m, n >= 2.
        size_limit: The maximum number of entries to materialize. Defaults
            to :data:`chainspec.constants.COMPOUND_SIZE_LIMIT`.

    Returns:
        An int64 array of shape (C(m, 2), C(n, 2)).

    Raises:
        InvalidInputError: Raised if m < 2 or n < 2.
        ResourceLimitError: Raised if the result would exceed ``size_limit``
            entries.
    """
    matrix = as_matrix(matrix)
    m, n = matrix.shape
    if m < 2 or n < 2:
        raise InvalidInputError(
            f'The second compound needs at least 2 rows and 2 columns, got '
            f'a {m}x{n} matrix.')
    size = math.comb(m, 2) * math.comb(n, 2)
    if size > size_limit:
        raise ResourceLimitError(
            f'Second compound of a {m}x{n} matrix has {size} entries, above '
            f'the limit of {size_limit}.')
    rows = np.array(list(itertools.combinations(range(m), 2)))
    cols = np.array(list(itertools.combinations(range(n), 2)))
    top = matrix[rows[:, 0]]
    bottom = matrix[rows[:, 1]]
    return (top[:, cols[:, 0]] * bottom[:, cols[:, 1]] -
            top[:, cols[:, 1]] * bottom[:, cols[:, 0]])


def nonzero_column_indicator(compound):
    """Returns the 0-1 vector marking the nonzero columns of a matrix."""
    return np.any(np.asarray(compound) != 0, axis=0).astype(np.int64)


def compound_sigma1(matrix):
    """Returns the largest singular value of the second compound.

    It equals sigma_1 sigma_2 of the matrix itself.
    """
    compound = second_compound(matrix).astype(float)
    if not compound.any():
        return 0.0
    return float(np.linalg.norm(compound, 2))


def omega_terms(profile):
    """Returns the (numerator, denominator) integers of omega.

    The numerator counts, for each pair k < l of distinct degrees,
    m_k m_l entries of size r_l (r_k - r_l) in (second compound) w, squared.
    The denominator is the number of nonzero columns of the second
    compound, sum_k r_{k+1} (r_k - r_{k+1}).
    """
    r, m = profile.r, profile.m
    h = len(r)
    numerator = sum(m[k] * m[l] * (r[l] * (r[k] - r[l])) ** 2
                    for k in range(h) for l in range(k + 1, h))
    denominator = sum(r[k + 1] * (r[k] - r[k + 1]) for k in range(h - 1))
    return numerator, denominator


def omega(profile):
    """Returns omega of a Ferrers profile as an exact Fraction.

    omega is 0 for a profile with a single distinct degree.
    """
    if profile.h == 1:
        return Fraction(0)
    numerator, denominator = omega_terms(profile)
    return Fraction(numerator, denominator)


def omega_prime(profile):
    """Returns omega of the conjugate profile."""
    return omega(conjugate_profile(profile))


def omega_star(profile):
    """Returns max(omega, omega')."""
    return max(omega(profile), omega_prime(profile))


def omega_bounds(profile):
    """Returns all three omega bounds as an :class:`OmegaBounds`."""
    w, w_prime = omega(profile), omega_prime(profile)
    return OmegaBounds(w, w_prime, max(w, w_prime), profile.h)


def lambda_sq_upper_bound(e, omega_value):
    """Returns (e + sqrt(e^2 - 4 omega)) / 2.

    Args:
        e: The number of edges.
        omega_value: A lower bound on sigma_1^2 sigma_2^2, e.g. omega*.

    Returns:
        The bound on lambda_max^2 as a float.

    Raises:
        NumericDomainError: Raised if e^2 < 4 omega, which no graph with e
            edges can satisfy.
    """
    discriminant = Fraction(e) ** 2 - 4 * Fraction(omega_value)
    if discriminant < 0:
        raise NumericDomainError(
            f'Inconsistent input: e^2 = {e ** 2} < 4 omega = '
            f'{4 * Fraction(omega_value)}.')
    return (e + math.sqrt(discriminant)) / 2


def chain_upper_bound(degrees, tol=constants.TOLERANCE):
    """Compares the omega* bound with the true lambda_max^2 of G_D.

    A warning is emitted when the bound is violated by more than ``tol``,
    or when it is not tight for a profile with two distinct degrees.

    Args:
        degrees: A DegreeSequence or iterable of degrees.
        tol: Absolute tolerance on squared eigenvalues.

    Returns:
        A :class:`ChainBound`; ``slack`` is upper_bound - lambda_sq.
    """
    degrees = as_degrees(degrees)
    profile = ferrers_profile(degrees)
    bounds = omega_bounds(profile)
    upper = lambda_sq_upper_bound(degrees.e, bounds.omega_star)
    s1, _ = sigma_pair(chain_from_degrees(degrees))
    lambda_sq = s1 ** 2
    slack = upper - lambda_sq
    if slack < -tol:
        warnings.warn(f'Bound on lambda_max^2 of G_D for D={degrees} is '
                      f'violated by {-slack:.3g}.')
    elif profile.h == 2 and slack > tol:
        warnings.warn(f'Bound on lambda_max^2 for D={degrees} has two '
                      f'distinct degrees but slack {slack:.3g}.')
    return ChainBound(degrees, degrees.e, bounds.omega, bounds.omega_prime,
                      bounds.omega_star, upper, lambda_sq, slack)
