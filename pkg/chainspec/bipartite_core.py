"""Degree sequences, chain graphs and exhaustive enumerators of 0-1 matrices.

A bipartite graph G = (V u W, E) with #V = m and #W = n is handled through
its m x n representation matrix A, the off-diagonal block of the adjacency
matrix [[0, A], [A^T, 0]]. The chain graph G_D of a degree sequence D is the
graph whose representation matrix has left-justified rows with row sums D.
"""

import collections
import itertools
import logging
import numbers
import re

import networkx as nx
import numpy as np

from chainspec import constants
from chainspec.chainspec_exceptions import (InvalidInputError,
                                            ResourceLimitError)

log = logging.getLogger(__name__)


class DegreeSequence():
    """A nonincreasing sequence of positive integers.

    These are the degrees d_1 >= d_2 >= ... >= d_m of the vertices on one
    side of a bipartite graph.

    Args:
        degrees: An iterable of positive integers in nonincreasing order.

    Raises:
        InvalidInputError: Raised if

            * the sequence is empty.
            * an entry is not a positive integer.
            * the entries are not in nonincreasing order.

    Attributes:
        degrees: A tuple of the degrees.
        m: The number of degrees.
        e: The sum of the degrees, i.e. the number of edges of G_D.
    """

    def __init__(self, degrees):
        degrees = tuple(degrees)
        if not degrees:
            raise InvalidInputError('A degree sequence may not be empty.')
        for d in degrees:
            if isinstance(d, bool) or not isinstance(d, numbers.Real) or \
                    int(d) != d or d < 1:
                raise InvalidInputError(
                    f'Degrees must be positive integers, got {d!r}.')
        degrees = tuple(int(d) for d in degrees)
        if any(a < b for a, b in zip(degrees, degrees[1:])):
            raise InvalidInputError(
                f'Degrees must be nonincreasing, got {list(degrees)}.')
        self._degrees = degrees
        self._e = sum(degrees)

    @classmethod
    def from_unsorted(cls, degrees):
        """Creates a degree sequence from degrees in any order.

        Zero degrees, i.e. isolated vertices, are dropped.
        """
        return cls(sorted((d for d in degrees if d != 0), reverse=True))

    @classmethod
    def parse(cls, text):
        """Parses the comma-separated text format, e.g. ``'5,2,2,1'``.

        Whitespace is ignored.

        Raises:
            InvalidInputError: Raised if a token is not a positive integer
                or the degrees are not nonincreasing.
        """
        tokens = ''.join(str(text).split()).split(',')
        degrees = []
        for token in tokens:
            if not re.fullmatch('[0-9]+', token):
                raise InvalidInputError(
                    f'Invalid degree {token!r} in {text!r}; expected '
                    'comma-separated positive integers.')
            degrees.append(int(token))
        return cls(degrees)

    @property
    def degrees(self):
        return self._degrees

    @property
    def m(self):
        return len(self._degrees)

    @property
    def e(self):
        return self._e

    def __len__(self):
        return len(self._degrees)

    def __iter__(self):
        return iter(self._degrees)

    def __getitem__(self, index):
        return self._degrees[index]

    def __eq__(self, other):
        if isinstance(other, DegreeSequence):
            return self._degrees == other.degrees
        return False

    def __hash__(self):
        return hash(self._degrees)

    def __lt__(self, other):
        return self._degrees < other.degrees

    def __repr__(self):
        return f'DegreeSequence({list(self._degrees)})'

    def __str__(self):
        return ','.join(str(d) for d in self._degrees)


_FerrersProfile = collections.namedtuple('FerrersProfile', ('r', 'm'))


class FerrersProfile(_FerrersProfile):
    """Run-length encoding of the staircase of a chain graph.

    Attributes:
        r: The distinct degrees r_1 > r_2 > ... > r_h.
        m: Their multiplicities m_1, ..., m_h.
        h: The number of distinct degrees.
    """
    __slots__ = ()

    def __new__(cls, r, m):
        r = tuple(int(x) for x in r)
        m = tuple(int(x) for x in m)
        if not r or len(r) != len(m):
            raise InvalidInputError(
                'A Ferrers profile needs equally many distinct degrees and '
                f'multiplicities, got r={r} and m={m}.')
        if any(x < 1 for x in r + m):
            raise InvalidInputError(
                f'Profile entries must be positive, got r={r} and m={m}.')
        if any(a <= b for a, b in zip(r, r[1:])):
            raise InvalidInputError(
                f'Distinct degrees must be strictly decreasing, got r={r}.')
        return super().__new__(cls, r, m)

    @property
    def h(self):
        return len(self.r)

    @property
    def e(self):
        return sum(rk * mk for rk, mk in zip(self.r, self.m))

    def to_degrees(self):
        """Returns the degree sequence encoded by this profile."""
        return DegreeSequence(
            [rk for rk, mk in zip(self.r, self.m) for _ in range(mk)])


def as_degrees(degrees):
    """Returns degrees as a DegreeSequence, converting iterables."""
    if isinstance(degrees, DegreeSequence):
        return degrees
    if isinstance(degrees, FerrersProfile):
        return degrees.to_degrees()
    return DegreeSequence(degrees)


def as_matrix(matrix, no_isolated=False):
    """Validates a representation matrix and returns it as an int array.

    Args:
        matrix: A 2-dimensional array-like of zeros and ones.
        no_isolated: Whether to require that there are no all-zero rows and
            no all-zero columns. Defaults to False.

    Returns:
        A 2-dimensional numpy array of dtype int64.

    Raises:
        InvalidInputError: Raised if the matrix is not 2-dimensional, has
            entries outside {0, 1}, or has a zero row or column when
            ``no_isolated`` is set.
    """
    array = np.asarray(matrix)
    if array.ndim != 2 or 0 in array.shape:
        raise InvalidInputError(
            f'A representation matrix must be a nonempty 2-dimensional '
            f'array, got shape {array.shape}.')
    if not np.all((array == 0) | (array == 1)):
        raise InvalidInputError(
            'A representation matrix may only have entries 0 and 1.')
    array = array.astype(np.int64)
    if no_isolated:
        zero_rows = np.flatnonzero(array.sum(axis=1) == 0)
        zero_cols = np.flatnonzero(array.sum(axis=0) == 0)
        if zero_rows.size or zero_cols.size:
            raise InvalidInputError(
                'Matrix has isolated vertices: zero rows '
                f'{zero_rows.tolist()} and zero columns '
                f'{zero_cols.tolist()}.')
    return array


def chain_from_degrees(degrees):
    """Constructs the representation matrix of the chain graph G_D.

    Row i has d_i ones, left-justified, so the matrix is m x d_1 and has no
    zero rows or columns. For example, D = {5, 2, 2, 1} gives::

        1 1 1 1 1
        1 1 0 0 0
        1 1 0 0 0
        1 0 0 0 0

    Args:
        degrees: A DegreeSequence or an iterable of nonincreasing positive
            integers.

    Returns:
        An m x d_1 int64 array.
    """
    degrees = as_degrees(degrees)
    d = np.array(degrees.degrees)
    return (np.arange(degrees[0]) < d[:, np.newaxis]).astype(np.int64)


def ferrers_profile(degrees):
    """Groups equal degrees into the profile (r_k, m_k), r decreasing."""
    degrees = as_degrees(degrees)
    runs = [(d, len(list(group)))
            for d, group in itertools.groupby(degrees.degrees)]
    r, m = zip(*runs)
    return FerrersProfile(r, m)


def conjugate_profile(profile):
    """Returns the profile of the transposed Ferrers diagram.

    With r_{h+1} = 0, the conjugate has r'_i = m_1 + ... + m_{h-i+1} and
    m'_i = r_{h-i+1} - r_{h-i+2}. It is the profile of the column sums of
    the chain matrix.
    """
    r, m = profile.r, profile.m
    h = len(r)
    r_ext = r + (0,)
    r_prime = [sum(m[:h - i]) for i in range(h)]
    m_prime = [r_ext[h - i - 1] - r_ext[h - i] for i in range(h)]
    return FerrersProfile(r_prime, m_prime)


def conjugate_degrees(degrees):
    """Returns the column-sum degree sequence of the chain graph G_D."""
    return conjugate_profile(ferrers_profile(degrees)).to_degrees()


def dominates(degrees, other):
    """Whether D > D' in the dominance order.

    D > D' means m >= m', d_i >= d'_i for i <= m', and D != D'.
    """
    degrees, other = as_degrees(degrees), as_degrees(other)
    if degrees.m < other.m or degrees == other:
        return False
    return all(a >= b for a, b in zip(degrees, other))


def are_isomorphic_chains(degrees, other):
    """Whether G_D and G_D' are isomorphic.

    A chain graph is determined by its Ferrers diagram, and transposing the
    diagram gives the same graph with the sides swapped.
    """
    degrees, other = as_degrees(degrees), as_degrees(other)
    return degrees == other or conjugate_degrees(degrees) == other


def is_complete_pattern(matrix):
    """Whether the representation matrix is all ones, i.e. G is K_{p,q}.

    Raises:
        InvalidInputError: Raised if the matrix has a zero row or column.
    """
    matrix = as_matrix(matrix, no_isolated=True)
    return bool(np.all(matrix == 1))


def is_one_vertex_extension(degrees):
    """Whether G_D is a complete bipartite graph plus one vertex.

    The added vertex is joined to some, but not all, vertices of the
    opposite side. This is the shape of the conjectured extremal graphs, and
    holds exactly when h = 2 and either the last degree is unique
    (m_2 = 1) or the top degree exceeds the next by one (r_1 - r_2 = 1).
    """
    profile = ferrers_profile(degrees)
    if profile.h != 2:
        return False
    return profile.m[1] == 1 or profile.r[0] - profile.r[1] == 1


def adjacency_matrix(matrix):
    """Returns the (m + n) x (m + n) adjacency matrix [[0, A], [A^T, 0]]."""
    matrix = as_matrix(matrix)
    m, n = matrix.shape
    return np.block([[np.zeros((m, m), np.int64), matrix],
                     [matrix.T, np.zeros((n, n), np.int64)]])


def left_justify(matrix):
    """Moves the ones of every row to the beginning of that row."""
    matrix = as_matrix(matrix)
    n = matrix.shape[1]
    return (np.arange(n) < matrix.sum(axis=1)[:, np.newaxis]).astype(np.int64)


def canonical_form(matrix):
    """Returns a canonical row and column ordering of a 0-1 matrix.

    Rows are sorted by degree, then lexicographically, both descending;
    columns are sorted likewise. The two sorts are repeated until neither
    changes the matrix. A chain matrix is its own canonical form, and so is
    every row and column permutation of it.
    """
    matrix = as_matrix(matrix)
    for _ in range(sum(matrix.shape) + 1):
        rows = sorted(range(matrix.shape[0]),
                      key=lambda i: (-matrix[i].sum(),
                                     tuple(-matrix[i])))
        result = matrix[rows]
        cols = sorted(range(result.shape[1]),
                      key=lambda j: (-result[:, j].sum(),
                                     tuple(-result[:, j])))
        result = result[:, cols]
        if np.array_equal(result, matrix):
            break
        matrix = result
    return matrix


def to_graph(matrix):
    """Builds a networkx graph from a representation matrix.

    Row vertices are labelled ``('v', i)`` with ``bipartite=0`` and column
    vertices ``('w', j)`` with ``bipartite=1``.
    """
    matrix = as_matrix(matrix)
    graph = nx.Graph()
    graph.add_nodes_from((('v', i) for i in range(matrix.shape[0])),
                         bipartite=0)
    graph.add_nodes_from((('w', j) for j in range(matrix.shape[1])),
                         bipartite=1)
    graph.add_edges_from((('v', i), ('w', j))
                         for i, j in zip(*np.nonzero(matrix)))
    return graph


def is_connected(matrix):
    """Whether the bipartite graph of the matrix is connected."""
    return nx.is_connected(to_graph(matrix))


def component_degree_sequences(matrix):
    """Returns the row-side degree sequences of the connected components.

    Components without a row vertex, or without edges, are skipped. The
    list is sorted in descending order of the sequences.
    """
    graph = to_graph(matrix)
    sequences = []
    for component in nx.connected_components(graph):
        degrees = [graph.degree(node) for node in component
                   if node[0] == 'v']
        if any(degrees):
            sequences.append(DegreeSequence.from_unsorted(degrees))
    return sorted(sequences, reverse=True)


def _partitions(total, max_part, max_parts):
    """Yields partitions of total into at most max_parts parts of size at
    most max_part, in descending lexicographic order."""
    if total == 0:
        yield ()
        return
    if max_parts == 0:
        return
    for first in range(min(total, max_part), 0, -1):
        if first * max_parts < total:
            break
        for rest in _partitions(total - first, first, max_parts - 1):
            yield (first,) + rest


def enumerate_chain_candidates(p, q, e):
    """Lists the degree sequences of the chain graphs in K(p, q, e).

    These are the sequences with at most p parts, each at most q, summing to
    e, and not all equal (equal parts give a complete bipartite graph). The
    order is descending lexicographic, largest first part first.

    Args:
        p: The size of the smaller side, 2 <= p <= q.
        q: The size of the larger side.
        e: The number of edges, 1 < e < pq.

    Returns:
        A list of DegreeSequence.

    Raises:
        InvalidInputError: Raised if the parameters violate
            2 <= p <= q or 1 < e < pq.
    """
    _check_instance(p, q, e)
    return [DegreeSequence(parts) for parts in _partitions(e, q, p)
            if parts[0] != parts[-1]]


def _check_instance(p, q, e):
    if not 2 <= p <= q:
        raise InvalidInputError(f'Expected 2 <= p <= q, got p={p}, q={q}.')
    if not 1 < e < p * q:
        raise InvalidInputError(
            f'Expected 1 < e < pq = {p * q}, got e={e}.')


def enumerate_row_sum_matrices(degrees, n, budget=None):
    """Enumerates the 0-1 matrices with row sums D and no zero column.

    Rows are filled in order; each row runs through its column patterns in
    lexicographic order of the support. Partial fillings that can no longer
    cover every column are pruned.

    Args:
        degrees: A DegreeSequence or iterable of the row sums.
        n: The number of columns, n >= d_1.
        budget: The maximum number of search nodes to visit. Optional;
            defaults to :func:`chainspec.constants.get_budget`.

    Returns:
        A generator of m x n int64 arrays.

    Raises:
        InvalidInputError: Raised if n < d_1.
        ResourceLimitError: Raised, while iterating, once the search visits
            more than ``budget`` nodes.
    """
    degrees = as_degrees(degrees)
    if n < degrees[0]:
        raise InvalidInputError(
            f'Need at least d_1 = {degrees[0]} columns, got n={n}.')
    budget = constants.get_budget(budget)
    if degrees.e < n:
        log.debug('No matrix with row sums %s covers %d columns.', degrees, n)
    return _iter_row_sum_matrices(degrees, n, budget)


def _iter_row_sum_matrices(degrees, n, budget):
    m = degrees.m
    # Row patterns as (column bitmask, row array) pairs.
    patterns = {}
    for d in set(degrees):
        rows = []
        for support in itertools.combinations(range(n), d):
            row = np.zeros(n, np.int64)
            row[list(support)] = 1
            rows.append((sum(1 << j for j in support), row))
        patterns[d] = rows
    # remaining[i] is the number of ones still to place in rows i..m-1
    remaining = [sum(degrees[i:]) for i in range(m + 1)]
    matrix = np.zeros((m, n), np.int64)
    visited = 0

    def fill(i, covered):
        nonlocal visited
        if i == m:
            yield matrix.copy()
            return
        for mask, row in patterns[degrees[i]]:
            visited += 1
            if visited > budget:
                raise ResourceLimitError(
                    f'Enumerating matrices with row sums {degrees} and {n} '
                    f'columns exceeded the budget of {budget} nodes.')
            now_covered = covered | mask
            if n - bin(now_covered).count('1') > remaining[i + 1]:
                continue
            matrix[i] = row
            yield from fill(i + 1, now_covered)

    yield from fill(0, 0)
