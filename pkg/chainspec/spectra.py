"""Singular values of representation matrices.

The largest eigenvalue of a bipartite graph equals the largest singular value
sigma_1 of its representation matrix A. Singular values are computed as square
roots of the eigenvalues of the Gram matrix A A^T with the symmetric LAPACK
solver.
"""

import collections
import warnings

import numpy as np

from chainspec import constants
from chainspec.bipartite_core import as_matrix, adjacency_matrix
from chainspec.bipartite_core import is_complete_pattern
from chainspec.chainspec_exceptions import InvalidInputError

SpectralSummary = collections.namedtuple(
    'SpectralSummary', ('sigma1', 'sigma2', 'e', 'sqrt_e_gap'))
SpectralSummary.__doc__ = """\
Largest singular values of a representation matrix.

Attributes:
    sigma1: The largest singular value, i.e. lambda_max of the graph.
    sigma2: The second largest singular value, 0 for rank one.
    e: The number of edges.
    sqrt_e_gap: sqrt(e) - sigma1.
"""


def _nonzero_matrix(matrix):
    matrix = as_matrix(matrix)
    if not matrix.any():
        raise InvalidInputError(
            'The singular values of a zero matrix are not defined here.')
    return matrix


def _gram(matrix):
    # Use the smaller of A A^T and A^T A; both share the nonzero spectrum.
    if matrix.shape[0] > matrix.shape[1]:
        matrix = matrix.T
    return matrix @ matrix.T


def gram_eigenvalues(matrix):
    """Returns the eigenvalues of the Gram matrix, nonincreasing.

    These are the squared singular values. Tiny negative round-off is
    clipped to zero.

    Args:
        matrix: A nonzero 0-1 representation matrix.

    Returns:
        A 1-dimensional float array of length min(m, n).

    Raises:
        InvalidInputError: Raised if the matrix is all zeros.
    """
    matrix = _nonzero_matrix(matrix)
    values = np.linalg.eigvalsh(_gram(matrix).astype(float))[::-1]
    return np.clip(values, 0, None)


def sigma1(matrix):
    """Returns the largest singular value of a nonzero 0-1 matrix."""
    return float(np.sqrt(gram_eigenvalues(matrix)[0]))


def sigma_pair(matrix):
    """Returns (sigma_1, sigma_2); sigma_2 is 0 for a single row or column."""
    values = gram_eigenvalues(matrix)
    second = values[1] if values.size > 1 else 0.0
    return float(np.sqrt(values[0])), float(np.sqrt(second))


def sigma1_batch(matrices):
    """Returns sigma_1 of every matrix in a stack of equally shaped matrices.

    Args:
        matrices: An array of shape (k, m, n) of nonzero 0-1 matrices.

    Returns:
        A float array of length k.
    """
    stack = np.asarray(matrices)
    if stack.ndim != 3:
        raise InvalidInputError(
            f'Expected a stack of matrices, got shape {stack.shape}.')
    if stack.shape[0] == 0:
        return np.zeros(0)
    if stack.shape[1] > stack.shape[2]:
        stack = np.swapaxes(stack, 1, 2)
    stack = stack.astype(float)
    grams = stack @ np.swapaxes(stack, 1, 2)
    values = np.linalg.eigvalsh(grams)[:, -1]
    return np.sqrt(np.clip(values, 0, None))


def sqrt_e_gap(matrix, tol=constants.TOLERANCE):
    """Returns sqrt(e) - sigma_1, the slack in lambda_max <= sqrt(e).

    The gap is below ``tol`` exactly when the matrix is all ones. A warning is
    emitted if the numerical gap disagrees with :func:`is_complete_pattern`.

    Args:
        matrix: A 0-1 matrix without zero rows or columns.
        tol: Absolute tolerance for equality. Defaults to
            :data:`chainspec.constants.TOLERANCE`.

    Raises:
        InvalidInputError: Raised if the matrix has a zero row or column.
    """
    matrix = as_matrix(matrix, no_isolated=True)
    gap = float(np.sqrt(matrix.sum())) - sigma1(matrix)
    if (abs(gap) < tol) != is_complete_pattern(matrix):
        warnings.warn(
            f'sqrt(e) gap {gap:.3g} disagrees with the complete pattern '
            f'test for a {matrix.shape[0]}x{matrix.shape[1]} matrix.')
    return gap


def spectral_summary(matrix):
    """Computes a :class:`SpectralSummary` of a nonzero 0-1 matrix."""
    s1, s2 = sigma_pair(matrix)
    e = int(as_matrix(matrix).sum())
    return SpectralSummary(s1, s2, e, float(np.sqrt(e)) - s1)


def dominant_vectors(matrix):
    """Returns the unit Perron pair (x, y) with A y = s1 x and A^T x = s1 y.

    The sign is fixed so that both vectors are nonnegative.

    Args:
        matrix: A nonzero 0-1 matrix.

    Returns:
        A tuple of 1-dimensional float arrays of lengths m and n.
    """
    matrix = _nonzero_matrix(matrix).astype(float)
    values, vectors = np.linalg.eigh(matrix @ matrix.T)
    x = vectors[:, -1]
    if x.sum() < 0:
        x = -x
    s1 = np.sqrt(max(values[-1], 0.0))
    y = matrix.T @ x / s1
    return x, y


def adjacency_spectrum(matrix):
    """Returns the eigenvalues of [[0, A], [A^T, 0]], nonincreasing."""
    block = adjacency_matrix(matrix).astype(float)
    return np.linalg.eigvalsh(block)[::-1]


def lambda_max(matrix):
    """Returns the largest adjacency eigenvalue of the bipartite graph."""
    return sigma1(matrix)
