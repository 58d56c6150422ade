"""C-matrices M(c) and the vertex decomposition of degree vectors.

For a nonincreasing nonnegative vector c the C-matrix has entries
M(c)[i, j] = min(c_i, c_j) = c_max(i, j). For an integer degree vector d the
chain matrix A(d) satisfies A(d) A(d)^T = M(d), so lambda_1(M(d)) is the
squared largest eigenvalue of the chain graph G_d.
"""

import collections
import logging
import math
import numbers
from fractions import Fraction

import numpy as np

from chainspec import constants
from chainspec.chainspec_exceptions import InvalidInputError, VerificationError

log = logging.getLogger(__name__)

TraceIdentities = collections.namedtuple(
    'TraceIdentities', ('e', 's2', 'beta'))

ConvexDecomposition = collections.namedtuple(
    'ConvexDecomposition', ('base_degree', 'excess', 'excess_profile', 's',
                            'vertices', 'coefficients'))
ConvexDecomposition.__doc__ = """\
A degree vector d written as a convex combination of rank-two vertices.

Attributes:
    base_degree: The smallest degree d_m.
    excess: e' = e - m d_m, the number of edges above the base rectangle.
    excess_profile: The positive excesses delta_i = d_i - d_m.
    s: The number of positive excesses.
    vertices: The CVectors a_k = (e'/k) 1_{m,k} + d_m 1_{m,m}, k = 1..s.
    coefficients: Fractions alpha_k >= 0 summing to 1 with
        sum_k alpha_k a_k = d.
"""


def _exact(value):
    """Returns an integral Fraction as int, anything else unchanged."""
    if isinstance(value, Fraction) and value.denominator == 1:
        return int(value)
    return value


class CVector():
    """A nonincreasing vector of nonnegative reals.

    Args:
        entries: An iterable of nonnegative numbers in nonincreasing order.
            Ints and Fractions are kept exact.

    Raises:
        InvalidInputError: Raised if the vector is empty, has a negative or
            non-numeric entry, or increases somewhere.
    """

    def __init__(self, entries):
        entries = tuple(_exact(x) for x in entries)
        if not entries:
            raise InvalidInputError('A C-vector may not be empty.')
        for x in entries:
            if isinstance(x, bool) or not isinstance(x, numbers.Real) or \
                    x < 0 or x != x:
                raise InvalidInputError(
                    f'C-vector entries must be nonnegative reals, got {x!r}.')
        if any(a < b for a, b in zip(entries, entries[1:])):
            raise InvalidInputError(
                f'C-vector entries must be nonincreasing, got {entries}.')
        self._entries = entries

    @property
    def entries(self):
        return self._entries

    @property
    def p(self):
        return len(self._entries)

    @property
    def positive(self):
        """The positive prefix c_+."""
        return CVector([x for x in self._entries if x > 0] or [0])

    @property
    def h(self):
        """The number of distinct positive entries."""
        return len({x for x in self._entries if x > 0})

    def as_array(self):
        """Returns the entries as an int64 array if integral, else float."""
        if all(isinstance(x, numbers.Integral) for x in self._entries):
            return np.array(self._entries, dtype=np.int64)
        return np.array([float(x) for x in self._entries])

    def __len__(self):
        return len(self._entries)

    def __iter__(self):
        return iter(self._entries)

    def __getitem__(self, index):
        return self._entries[index]

    def __eq__(self, other):
        if isinstance(other, CVector):
            return self._entries == other.entries
        return False

    def __hash__(self):
        return hash(self._entries)

    def __repr__(self):
        return f'CVector({list(self._entries)})'


def as_cvector(c):
    if isinstance(c, CVector):
        return c
    return CVector(c)


def build_cmatrix(c):
    """Builds the symmetric p x p matrix with entries min(c_i, c_j).

    Integer vectors give an exact int64 matrix, e.g. c = (3, 1) gives
    [[3, 1], [1, 1]].
    """
    values = as_cvector(c).as_array()
    return np.minimum.outer(values, values)


def cmatrix_eigenvalues(c):
    """Returns the eigenvalues of M(c), nonincreasing."""
    matrix = build_cmatrix(c).astype(float)
    return np.linalg.eigvalsh(matrix)[::-1]


def cmatrix_rank(c):
    """Returns the rank of M(c): the number of distinct positive entries."""
    return as_cvector(c).h


def numerical_rank(c, tol=constants.RANK_TOLERANCE):
    """Returns the number of eigenvalues of M(c) above ``tol``."""
    return int(np.sum(cmatrix_eigenvalues(c) > tol))


def trace_identities(c):
    """Returns the symmetric functions of the spectrum of M(c).

    Returns:
        A :class:`TraceIdentities` of

            * e = trace M(c) = sum_i c_i, the sum of the eigenvalues.
            * s2 = sum_i (2i - 1) c_i^2, the sum of squared eigenvalues.
            * beta = sum_{i<j} c_j (c_i - c_j), the sum of products of
              pairs of eigenvalues.

        Values are exact for int and Fraction entries.
    """
    c = as_cvector(c).entries
    e = sum(c)
    s2 = sum((2 * i + 1) * x * x for i, x in enumerate(c))
    beta = sum(c[j] * (c[i] - c[j])
               for i in range(len(c)) for j in range(i + 1, len(c)))
    return TraceIdentities(e, s2, beta)


def bound_est1(c):
    """Returns sqrt(sum_i (2i - 1) c_i^2), an upper bound on lambda_1(c)."""
    return math.sqrt(trace_identities(c).s2)


def maxest_value(e, beta, h):
    """Returns the larger root of x (e - x) + (h - 2)/(2(h - 1)) (e - x)^2 =
    beta, the maxest bound for e, beta and h distinct positive entries.

    It increases with h towards sqrt(e^2 - 2 beta) = est1.
    """
    if h < 2:
        raise InvalidInputError(f'maxest needs h >= 2, got h={h}.')
    alpha = Fraction(h, 2 * (h - 1))
    discriminant = Fraction(e) ** 2 - 4 * alpha * Fraction(beta)
    # Exact for exact inputs; float inputs may round slightly below zero.
    discriminant = max(discriminant, 0)
    return float(((2 * alpha - 1) * Fraction(e) +
                  Fraction(math.sqrt(discriminant))) / (2 * alpha))


def bound_maxest(c):
    """Returns the maxest upper bound on lambda_1(c).

    With h the number of distinct positive entries of c and
    a = h / (2(h - 1)) the bound is ((2a - 1) e + sqrt(e^2 - 4 a beta)) / 2a.
    It equals lambda_1(c) when h = 2 and never exceeds :func:`bound_est1`.

    Raises:
        InvalidInputError: Raised if c has fewer than two distinct positive
            entries; use :func:`bound_est1` instead.
    """
    c = as_cvector(c)
    identities = trace_identities(c)
    return maxest_value(identities.e, identities.beta, c.h)


def convex_decomposition(d):
    """Writes an integer degree vector as a convex combination of vertices.

    With d_m the last entry, delta_i = d_i - d_m and e' = sum_i delta_i, the
    vertices are a_k = (e'/k) 1_{m,k} + d_m 1_{m,m} for k = 1..s, where s is
    the number of positive delta_i. The coefficients are
    alpha_k = k (delta_k - delta_{k+1}) / e' with delta_{s+1} = 0.

    Args:
        d: Positive nonincreasing integers with at least two distinct
            values.

    Returns:
        A :class:`ConvexDecomposition`.

    Raises:
        InvalidInputError: Raised if d is not a positive integer vector or
            all its entries are equal.
    """
    d = as_cvector(d)
    if not all(isinstance(x, numbers.Integral) and x > 0 for x in d):
        raise InvalidInputError(
            f'Expected positive integer degrees, got {list(d)}.')
    if d.h < 2:
        raise InvalidInputError(
            f'All degrees of {list(d)} are equal; the decomposition is '
            'degenerate.')
    m = d.p
    base = d[-1]
    delta = [x - base for x in d if x > base]
    s = len(delta)
    excess = sum(delta)
    vertices = []
    coefficients = []
    for k in range(1, s + 1):
        top = Fraction(excess, k) + base
        vertices.append(CVector([top] * k + [base] * (m - k)))
        following = delta[k] if k < s else 0
        coefficients.append(Fraction(k * (delta[k - 1] - following), excess))
    total = [sum(alpha * v[i] for alpha, v in zip(coefficients, vertices))
             for i in range(m)]
    if total != list(d) or sum(coefficients) != 1:
        raise VerificationError(
            f'Convex decomposition of {list(d)} does not re-sum to d.')
    log.debug('Decomposed %s into %d vertices.', list(d), s)
    return ConvexDecomposition(base, excess, tuple(delta), s, tuple(vertices),
                               tuple(_exact(a) for a in coefficients))


def vertex_eigenvalue(a_k, m, k, d_m, e_prime):
    """Returns lambda_1 of M(a_k) in closed form.

    M(a_k) has rank at most two, trace e = e' + m d_m and
    sigma_1^2 sigma_2^2 = k (m - k) (e'/k) d_m, so
    lambda_1 = (e + sqrt(e^2 - 4 (m - k) e' d_m)) / 2. For k = m the matrix
    has rank one and lambda_1 = e.

    Args:
        a_k: The vertex CVector, of length m.
        m: The number of degrees.
        k: The vertex index, 1 <= k <= m.
        d_m: The base degree.
        e_prime: The excess e'.

    Raises:
        InvalidInputError: Raised if k is out of range or a_k is not the
            vertex described by (m, k, d_m, e').
    """
    a_k = as_cvector(a_k)
    if not 1 <= k <= m:
        raise InvalidInputError(f'Expected 1 <= k <= m={m}, got k={k}.')
    expected = [Fraction(e_prime, k) + d_m] * k + [d_m] * (m - k)
    if a_k.p != m or list(a_k) != expected:
        raise InvalidInputError(
            f'{a_k!r} is not the vertex a_{k} for m={m}, d_m={d_m}, '
            f"e'={e_prime}.")
    e = e_prime + m * d_m
    if k == m:
        return float(e)
    omega = (m - k) * e_prime * d_m
    return (e + math.sqrt(max(e * e - 4 * omega, 0))) / 2


def vertex_bound(d):
    """Returns max_k lambda_1(M(a_k)), an upper bound on lambda_1(M(d))."""
    decomposition = convex_decomposition(d)
    m = len(as_cvector(d))
    return max(vertex_eigenvalue(a, m, k, decomposition.base_degree,
                                 decomposition.excess)
               for k, a in enumerate(decomposition.vertices, start=1))
