"""Omega minimization, the extremal chain graphs G_{r,l+1} and verifiers.

A chain graph with two distinct degrees is described by a
:class:`TwoBlockProfile` (m1, m2, n1, n2): m1 rows of degree n1 + n2 and m2
rows of degree n1. It has e = m1 n1 + m1 n2 + m2 n1 edges and
sigma_1^2 sigma_2^2 = omega = m1 m2 n1 n2, so maximizing lambda_max over such
graphs with e edges means minimizing omega.

For e = rl + r - 1 the graph G_{r,l+1}, i.e. K_{r-1,l+1} plus a vertex joined
to l of the l + 1 vertices on the other side, has the largest eigenvalue
among the non-complete subgraphs of K_{p,q} with e edges, for the (p, q)
accepted by :func:`check_hypotheses`. :func:`verify_conjecture` checks this
exhaustively, and reports the shape of the winner when no hypothesis holds.
"""

import collections
import itertools
import logging
import math
import multiprocessing
import numbers
import warnings
from fractions import Fraction

import numpy as np
import pandas as pd
import scipy.optimize as opt
from tqdm import tqdm

from chainspec import constants
from chainspec.bipartite_core import (DegreeSequence, are_isomorphic_chains,
                                      as_degrees, canonical_form,
                                      chain_from_degrees,
                                      component_degree_sequences,
                                      conjugate_degrees, dominates,
                                      enumerate_chain_candidates,
                                      enumerate_row_sum_matrices,
                                      ferrers_profile, is_connected,
                                      is_one_vertex_extension, left_justify)
from chainspec.chainspec_exceptions import (EmptyFeasibleError,
                                            InvalidInputError,
                                            OutOfHypothesisError,
                                            VerificationError)
from chainspec.cmatrix import convex_decomposition, vertex_bound
from chainspec.compound_bounds import lambda_sq_upper_bound, omega_star
from chainspec.spectra import sigma1, sigma1_batch

log = logging.getLogger(__name__)

# Statuses of a single check in a report.
PASS = 'pass'
FAIL = 'fail'
INDISTINGUISHABLE = 'indistinguishable'
CONSISTENT = 'consistent'
INCONSISTENT = 'inconsistent'

# Number of matrices evaluated together in the dominance verifier.
DOMINANCE_CHUNK_SIZE = 4096


_TwoBlockProfile = collections.namedtuple(
    'TwoBlockProfile', ('m1', 'm2', 'n1', 'n2'))


class TwoBlockProfile(_TwoBlockProfile):
    """The quadruple (m1, m2, n1, n2) of a chain graph with h = 2.

    In terms of the Ferrers profile, n1 = r_2 and n2 = r_1 - r_2. Entries
    are positive integers in the integer problems and reals >= 1 in the
    continuous one.
    """
    __slots__ = ()

    @property
    def edges(self):
        return self.m1 * self.n1 + self.m1 * self.n2 + self.m2 * self.n1

    @property
    def omega(self):
        return self.m1 * self.m2 * self.n1 * self.n2

    def swapped(self):
        """Returns the profile of the same graph with the sides exchanged."""
        return TwoBlockProfile(self.n1, self.n2, self.m1, self.m2)

    def to_degrees(self):
        """Returns {(n1 + n2)^m1, n1^m2}.

        Raises:
            InvalidInputError: Raised if an entry is not an integer.
        """
        if not all(_is_integral(x) for x in self):
            raise InvalidInputError(
                f'{self} has non-integer entries and no chain graph.')
        m1, m2, n1, n2 = (int(x) for x in self)
        return DegreeSequence([n1 + n2] * m1 + [n1] * m2)


AuxArgmin = collections.namedtuple('AuxArgmin', ('case', 'points'))

ExtremalInstance = collections.namedtuple(
    'ExtremalInstance', ('r', 'l', 'e', 'p', 'q', 'side_bound'))
ExtremalInstance.__doc__ = """\
Parameters e = rl + r - 1 and side bounds (p, q) under which G_{r,l+1} is
the unique extremal graph.

``side_bound`` is :func:`side_lower_bound` of (p, q, e): both sides of every
non-complete subgraph of K_{p,q} with e edges have at least that many
vertices, or None.
"""

CandidateRecord = collections.namedtuple(
    'CandidateRecord', ('degrees', 'lambda_max', 'omega_star', 'upper_bound',
                        'vertex_bound'))
CandidateRecord.__doc__ = """\
A chain candidate with its largest eigenvalue and two upper bounds on it:
``upper_bound`` from omega* and ``vertex_bound`` from the vertex
decomposition.
"""

Check = collections.namedtuple('Check', ('name', 'status', 'margin'))

TwoBlockResult = collections.namedtuple(
    'TwoBlockResult', ('omega', 'profiles', 'degrees', 'lambda_max'))

DominanceRow = collections.namedtuple(
    'DominanceRow', ('n', 'count', 'chain_sigma1', 'max_sigma1',
                     'attainers', 'margin', 'status', 'left_justify_margin',
                     'disconnected_maximizers'),
    defaults=(None, 0))
DominanceRow.__doc__ = """\
Results of the exhaustive search over one number of columns n.

Attributes:
    n: The number of columns.
    count: The number of matrices with row sums D and no zero column.
    chain_sigma1: sigma_1 of the chain matrix.
    max_sigma1: The largest sigma_1 found, or None without matrices.
    attainers: Matrices with the canonical form of the chain matrix.
    margin: chain_sigma1 minus the best other matrix, or None.
    status: The status of ``margin``.
    left_justify_margin: The smallest sigma_1(left_justify(A)) - sigma_1(A),
        or None without matrices.
    disconnected_maximizers: Matrices within tolerance of chain_sigma1 whose
        graph is not connected.
"""

RANKING_COLUMNS = ['degrees', 'lambda_max', 'omega_star', 'upper_bound']


def _is_integral(value):
    if isinstance(value, numbers.Integral):
        return True
    if isinstance(value, Fraction):
        return value.denominator == 1
    return False


def _is_rational(*values):
    return all(isinstance(x, numbers.Rational) for x in values)


def _exact(value):
    if isinstance(value, Fraction) and value.denominator == 1:
        return int(value)
    return value


def auxmin(a, b, e):
    """Minimizes xy over the segment a x + b y = e, x >= 1, y >= 1.

    xy is concave along the segment, so the minimum is at an end point:
    x = 1 when a < b, y = 1 when b < a, and both when a = b.

    Args:
        a: Positive coefficient of x.
        b: Positive coefficient of y.
        e: Right-hand side, e > a + b.

    Returns:
        A tuple (min_xy, AuxArgmin). ``AuxArgmin.case`` is one of
        ``'x=1'``, ``'y=1'`` or ``'x=1 or y=1'``, and ``AuxArgmin.points``
        lists the minimizing (x, y). Values are Fractions (or ints) for
        rational inputs, floats otherwise.

    Raises:
        InvalidInputError: Raised if a or b is not positive or e <= a + b.
    """
    if a <= 0 or b <= 0:
        raise InvalidInputError(
            f'Coefficients must be positive, got a={a}, b={b}.')
    if e <= a + b:
        raise InvalidInputError(f'Expected e > a + b, got a={a}, b={b}, '
                                f'e={e}.')
    if _is_rational(a, b, e):
        a, b, e = Fraction(a), Fraction(b), Fraction(e)
    else:
        a, b, e = float(a), float(b), float(e)
    x_end = (1, _exact((e - a) / b))
    y_end = (_exact((e - b) / a), 1)
    if a < b:
        return x_end[1], AuxArgmin('x=1', [x_end])
    if b < a:
        return y_end[0], AuxArgmin('y=1', [y_end])
    return x_end[1], AuxArgmin('x=1 or y=1', [x_end, y_end])


def _check_continuous(r, e):
    if not isinstance(r, numbers.Integral) or r < 2:
        raise InvalidInputError(f'Expected an integer r >= 2, got r={r}.')
    if e < r * r + 1:
        raise OutOfHypothesisError(
            f'The continuous minimum needs e >= r^2 + 1 = {r * r + 1}, got '
            f'e={e}.')


def min_omega_continuous(r, e):
    """Minimizes omega = m1 m2 n1 n2 over positive reals.

    The constraints are m1 n1 + m1 n2 + m2 n1 = e, all variables >= 1,
    m1 + m2 >= r and n1 + n2 >= r. The minimum is (r - 1)(e - r + 1)/r,
    attained at (m1, m2) = (r - 1, 1), (n1, n2) = ((e - r + 1)/r, 1) and at
    the swapped profile. Candidate solutions are checked by substitution
    into the edge identity, and only those that satisfy it are returned.

    Args:
        r: The side bound, r >= 2.
        e: The number of edges, e >= r^2 + 1.

    Returns:
        A tuple (min, solutions): the minimum as a Fraction (an int when
        integral) and a list of :class:`TwoBlockProfile`.

    Raises:
        OutOfHypothesisError: Raised if e < r^2 + 1.
    """
    _check_continuous(r, e)
    value = _exact(Fraction((r - 1) * (e - r + 1), r))
    n1 = _exact(Fraction(e - r + 1, r))
    proposed = [TwoBlockProfile(r - 1, 1, n1, 1),
                TwoBlockProfile(n1, 1, r - 1, 1),
                TwoBlockProfile(n1, 1, r, 1)]
    solutions = []
    for profile in proposed:
        if profile.edges == e and profile.omega == value:
            solutions.append(profile)
        else:
            log.debug('Rejected %s: %s edges and omega %s.', profile,
                      profile.edges, profile.omega)
    if len(solutions) != 2:
        warnings.warn(f'Expected two continuous minimizers for r={r}, e={e}, '
                      f'found {len(solutions)}.')
    return value, solutions


def grid_min_omega_continuous(r, e, grid=81, starts=5):
    """Minimizes omega numerically over the continuous feasible region.

    A dense grid over (m1, m2, n2), with n1 solved from the edge identity,
    seeds an SLSQP refinement of the best ``starts`` grid points.

    Args:
        r: The side bound, r >= 2.
        e: The number of edges, e >= r^2 + 1.
        grid: Number of grid points per axis. Defaults to 81.
        starts: Number of grid points refined. Defaults to 5.

    Returns:
        A tuple (min, TwoBlockProfile) of floats.
    """
    _check_continuous(r, e)
    m1, m2, n2 = np.meshgrid(np.linspace(1, e / 2, grid),
                             np.linspace(1, e, grid),
                             np.linspace(1, e, grid), indexing='ij')
    n1 = (e - m1 * n2) / (m1 + m2)
    feasible = (n1 >= 1) & (m1 + m2 >= r) & (n1 + n2 >= r)
    if not feasible.any():
        raise EmptyFeasibleError(f'No grid point is feasible for r={r}, '
                                 f'e={e}.')
    objective = np.where(feasible, m1 * m2 * n1 * n2, np.inf).ravel()
    order = np.argsort(objective, kind='stable')[:starts]
    points = np.stack([m1.ravel(), m2.ravel(), n1.ravel(), n2.ravel()],
                      axis=1)

    constraints = [
        {'type': 'eq',
         'fun': lambda x: x[0] * x[2] + x[0] * x[3] + x[1] * x[2] - e},
        {'type': 'ineq', 'fun': lambda x: x[0] + x[1] - r},
        {'type': 'ineq', 'fun': lambda x: x[2] + x[3] - r},
    ]
    best_value, best_x = objective[order[0]], points[order[0]]
    for index in order:
        if not np.isfinite(objective[index]):
            break
        res = opt.minimize(fun=np.prod, x0=points[index], method='SLSQP',
                           bounds=[(1, None)] * 4, constraints=constraints,
                           options={'ftol': 1e-14, 'maxiter': 500})
        violation = abs(constraints[0]['fun'](res.x))
        if res.success and violation < 1e-9 and res.fun < best_value:
            best_value, best_x = res.fun, res.x
    log.debug('Grid minimum for r=%d, e=%d: %s at %s.', r, e, best_value,
              best_x)
    return float(best_value), TwoBlockProfile(*(float(x) for x in best_x))


def min_omega_integer(e, r, p, q):
    """Minimizes omega = m1 m2 n1 n2 over positive integers exhaustively.

    The constraints are m1 n1 + m1 n2 + m2 n1 = e, m1 + m2 <= p,
    n1 + n2 <= q, m1 + m2 >= r and n1 + n2 >= r. For fixed (m1, m2, n2),
    n1 = (e - m1 n2) / (m1 + m2) must be a positive integer.

    Args:
        e: The number of edges, 3 <= e < pq.
        r: The lower bound on both side sizes, r >= 2.
        p: The bound on m1 + m2.
        q: The bound on n1 + n2, p <= q.

    Returns:
        A tuple (min, argmins) of an int and the sorted list of all
        minimizing :class:`TwoBlockProfile`.

    Raises:
        InvalidInputError: Raised if the parameters are out of range.
        EmptyFeasibleError: Raised if no profile satisfies the constraints.
    """
    if not 2 <= p <= q:
        raise InvalidInputError(f'Expected 2 <= p <= q, got p={p}, q={q}.')
    if not 3 <= e < p * q:
        raise InvalidInputError(f'Expected 3 <= e < pq = {p * q}, got e={e}.')
    if r < 2:
        raise InvalidInputError(f'Expected r >= 2, got r={r}.')
    best = None
    argmins = []
    for m1 in range(1, p):
        for m2 in range(max(1, r - m1), p - m1 + 1):
            for n2 in range(1, q):
                numerator = e - m1 * n2
                if numerator < m1 + m2:
                    break
                if numerator % (m1 + m2):
                    continue
                n1 = numerator // (m1 + m2)
                if not r <= n1 + n2 <= q:
                    continue
                profile = TwoBlockProfile(m1, m2, n1, n2)
                if best is None or profile.omega < best:
                    best, argmins = profile.omega, [profile]
                elif profile.omega == best:
                    argmins.append(profile)
    if best is None:
        raise EmptyFeasibleError(
            f'No positive integers satisfy the constraints for e={e}, r={r}, '
            f'p={p}, q={q}.')
    return best, sorted(argmins)


def min_omega_e3k1(k):
    """Minimizes omega for e = 3k + 1 and r = 3.

    The minimum is 2k, attained exactly at ((1, 2), (k, 1)) and
    ((k, 1), (1, 2)) for k >= 7. For 2 <= k <= 6 the value comes from an
    exhaustive search and is checked against 2k.

    Raises:
        InvalidInputError: Raised if k < 2.
        VerificationError: Raised if the search does not find 2k.
    """
    if not isinstance(k, numbers.Integral) or k < 2:
        raise InvalidInputError(f'Expected an integer k >= 2, got k={k}.')
    if k >= 7:
        return 2 * k, [TwoBlockProfile(1, 2, k, 1),
                       TwoBlockProfile(k, 1, 1, 2)]
    e = 3 * k + 1
    value, argmins = min_omega_integer(e, 3, e, e)
    if value != 2 * k:
        raise VerificationError(
            f'Exhaustive minimum for e={e} is {value}, not {2 * k}.')
    return value, argmins


def build_extremal_degrees(r, l):
    """Returns the degrees {(l + 1)^(r - 1), l} of G_{r,l+1}.

    Raises:
        OutOfHypothesisError: Raised unless 2 <= r <= l.
    """
    if r < 2 or r > l:
        raise OutOfHypothesisError(f'Expected 2 <= r <= l, got r={r}, l={l}.')
    return DegreeSequence([l + 1] * (r - 1) + [l])


def _admissible(r, l, p, q):
    if not 2 <= r <= l:
        return False
    if r == 2:
        return 2 <= p <= q and l < q
    # q <= l + 1 + l/(r - 1), in integers.
    return r <= p <= l + 1 <= q and (q - l - 1) * (r - 1) <= l


def check_hypotheses(p, q, e):
    """Finds the instance e = rl + r - 1 for which G_{r,l+1} is extremal.

    The accepted (r, l) satisfy 2 <= r <= l and either

        * r = 2 and l < q, or
        * 3 <= r <= p <= l + 1 <= q <= l + 1 + l/(r - 1).

    At most one (r, l) qualifies for given (p, q, e). Parameters outside
    2 <= p <= q and 1 < e < pq have no instance.

    Args:
        p: The size of the smaller side.
        q: The size of the larger side.
        e: The number of edges.

    Returns:
        An :class:`ExtremalInstance` carrying the side bound of
        :func:`side_lower_bound`, or None if no hypothesis holds. Without an
        instance the side bound is still available from
        :func:`side_lower_bound`.
    """
    if not 2 <= p <= q or not 1 < e < p * q:
        log.debug('No instance for p=%s, q=%s, e=%s outside the ranges.',
                  p, q, e)
        return None
    for r in range(2, p + 1):
        if (e + 1) % r:
            continue
        l = (e + 1) // r - 1
        if _admissible(r, l, p, q):
            return ExtremalInstance(r, l, e, p, q, side_lower_bound(p, q, e))
    return None


def side_lower_bound(p, q, e):
    """Returns the largest r with e = lr + r - 1, r <= p and
    q <= l + 1 + l/(r - 1), or None.

    Both sides of every non-complete subgraph of K_{p,q} with e edges then
    have at least r vertices.
    """
    best = None
    for r in range(2, p + 1):
        if (e + 1) % r:
            continue
        l = (e + 1) // r - 1
        if l >= 1 and (q - l - 1) * (r - 1) <= l:
            best = r
    return best


def admissible_instances(r, l):
    """Lists the (p, q) accepted by :func:`check_hypotheses` for (r, l).

    For r = 2 the larger side is unbounded; it is capped at q = e, beyond
    which the candidate set no longer changes.
    """
    build_extremal_degrees(r, l)
    e = r * l + r - 1
    if r == 2:
        return [(p, q) for q in range(l + 1, e + 1) for p in range(2, q + 1)
                if e < p * q]
    q_max = l + 1 + l // (r - 1)
    return [(p, q) for p in range(r, l + 2) for q in range(l + 1, q_max + 1)
            if e < p * q]


def _oriented(degrees):
    """Returns D or its conjugate, whichever has m <= d_1."""
    if degrees.m > degrees[0]:
        return conjugate_degrees(degrees)
    return degrees


def _evaluate_candidate(degrees):
    e = degrees.e
    lam = sigma1(chain_from_degrees(degrees))
    w_star = omega_star(ferrers_profile(degrees))
    upper = math.sqrt(lambda_sq_upper_bound(e, w_star))
    vertex = math.sqrt(vertex_bound(list(_oriented(degrees))))
    return CandidateRecord(degrees, lam, w_star, upper, vertex)


def _evaluate_chunk(chunk):
    return [_evaluate_candidate(degrees) for degrees in chunk]


def evaluate_candidates(candidates, workers=1):
    """Computes a :class:`CandidateRecord` for every degree sequence.

    The list is split into one chunk per worker; with more than one worker
    the chunks run in a process pool. Records come back in input order.
    """
    candidates = list(candidates)
    if workers > 1 and len(candidates) > 1:
        size = math.ceil(len(candidates) / workers)
        chunks = [candidates[i:i + size]
                  for i in range(0, len(candidates), size)]
        with multiprocessing.Pool(processes=min(workers, len(chunks))) as pool:
            results = pool.map(_evaluate_chunk, chunks)
        return [record for chunk in results for record in chunk]
    return _evaluate_chunk(candidates)


def _status(margin, tol):
    if margin is None or margin >= tol:
        return PASS
    if margin <= -tol:
        return FAIL
    return INDISTINGUISHABLE


class ExtremalReport(collections.namedtuple(
        'ExtremalReport', ('p', 'q', 'e', 'instance', 'candidates', 'winner',
                           'runner_up', 'winner_is_g_rl', 'margin',
                           'checks'))):
    """Ranked chain candidates of K(p, q, e) with checks.

    Attributes:
        p, q, e: The instance parameters.
        instance: The :class:`ExtremalInstance`, or None when no hypothesis
            holds.
        candidates: :class:`CandidateRecord` tuples, ranked by nonincreasing
            lambda_max; ties keep enumeration order.
        winner: The DegreeSequence with the largest lambda_max.
        runner_up: The best candidate not isomorphic to the winner, or None.
        winner_is_g_rl: Whether the winner is isomorphic to G_{r,l+1}; None
            when no hypothesis holds.
        margin: lambda(winner) - lambda(runner_up), or None.
        checks: A tuple of :class:`Check`.
    """
    __slots__ = ()

    @property
    def passed(self):
        return all(check.status != FAIL for check in self.checks)

    def to_frame(self):
        """Returns the ranking as a DataFrame.

        Columns are degrees, lambda_max, omega_star, upper_bound and
        vertex_bound; degrees are in the text format.
        """
        return pd.DataFrame(
            [[str(c.degrees), c.lambda_max, float(c.omega_star),
              c.upper_bound, c.vertex_bound] for c in self.candidates],
            columns=RANKING_COLUMNS + ['vertex_bound'])


def _rank(records, tol):
    """Sorts records by lambda_max and resolves a near tie at the top.

    Returns:
        A tuple (ranked, runner_up, margin, tie_resolved).
    """
    ranked = sorted(records, key=lambda c: -c.lambda_max)
    winner = ranked[0]
    runner_up = next((c for c in ranked[1:]
                      if not are_isomorphic_chains(c.degrees,
                                                   winner.degrees)), None)
    if runner_up is None:
        return ranked, None, None, False
    margin = winner.lambda_max - runner_up.lambda_max
    if margin >= tol:
        return ranked, runner_up, margin, False
    # Within tolerance: for two h = 2 chains with the same e, lambda^2
    # decreases strictly in omega.
    if ferrers_profile(winner.degrees).h == 2 and \
            ferrers_profile(runner_up.degrees).h == 2 and \
            winner.omega_star != runner_up.omega_star:
        if runner_up.omega_star < winner.omega_star:
            winner, runner_up = runner_up, winner
            ranked.remove(winner)
            ranked.insert(0, winner)
        log.debug('Near tie between %s and %s resolved exactly by omega.',
                  winner.degrees, runner_up.degrees)
        return ranked, runner_up, abs(margin), True
    return ranked, runner_up, margin, False


def verify_conjecture(p, q, e, tol=constants.TOLERANCE, workers=1):
    """Ranks every chain candidate of K(p, q, e) by lambda_max.

    If :func:`check_hypotheses` finds an instance (r, l), the winner must be
    G_{r,l+1} up to isomorphism and beat every non-isomorphic candidate by
    more than ``tol``. Its omega* must equal (r - 1)(e - r + 1)/r, every
    candidate must have at least r rows, and each vertex of its
    decomposition must have n1 + n2 >= r. Otherwise the report records
    whether the empirical winner is a complete bipartite graph plus one
    vertex.

    Args:
        p: The size of the smaller side, 2 <= p <= q.
        q: The size of the larger side.
        e: The number of edges, 1 < e < pq.
        tol: Absolute tolerance for strict comparisons. Defaults to
            :data:`chainspec.constants.TOLERANCE`.
        workers: The number of worker processes. Defaults to 1; the report
            does not depend on it.

    Returns:
        An :class:`ExtremalReport`.

    Raises:
        InvalidInputError: Raised if the parameters are out of range.
        EmptyFeasibleError: Raised if there is no chain candidate.
    """
    candidates = enumerate_chain_candidates(p, q, e)
    if not candidates:
        raise EmptyFeasibleError(
            f'K({p}, {q}, {e}) has no non-complete chain graph.')
    instance = check_hypotheses(p, q, e)
    log.debug('Evaluating %d candidates for p=%d, q=%d, e=%d.',
              len(candidates), p, q, e)
    records = evaluate_candidates(candidates, workers=workers)
    ranked, runner_up, margin, tie_resolved = _rank(records, tol)
    winner = ranked[0]
    margin_status = PASS if tie_resolved else _status(margin, tol)
    if margin_status == INDISTINGUISHABLE:
        warnings.warn(
            f'Winner {winner.degrees} and runner-up {runner_up.degrees} of '
            f'K({p}, {q}, {e}) are indistinguishable within {tol}.')

    checks = []
    sqrt_e = math.sqrt(e)
    checks.append(Check('below_sqrt_e', _status(sqrt_e - winner.lambda_max,
                                                tol),
                        sqrt_e - winner.lambda_max))
    bound_margin = min(c.upper_bound - c.lambda_max for c in ranked)
    checks.append(Check('omega_star_bound',
                        PASS if bound_margin > -tol else FAIL, bound_margin))
    vertex_margin = min(c.vertex_bound - c.lambda_max for c in ranked)
    checks.append(Check('vertex_bound',
                        PASS if vertex_margin > -tol else FAIL,
                        vertex_margin))

    winner_is_g_rl = None
    if instance is None:
        shape = is_one_vertex_extension(winner.degrees)
        checks.append(Check('conjecture_shape',
                            CONSISTENT if shape else INCONSISTENT, margin))
        if not shape:
            warnings.warn(f'Winner {winner.degrees} of K({p}, {q}, {e}) is '
                          'not a complete bipartite graph plus one vertex.')
    else:
        expected = build_extremal_degrees(instance.r, instance.l)
        winner_is_g_rl = are_isomorphic_chains(winner.degrees, expected)
        status = margin_status if winner_is_g_rl else FAIL
        checks.append(Check('winner_is_g_rl', status, margin))
        target = Fraction((instance.r - 1) * (e - instance.r + 1), instance.r)
        checks.append(Check('omega_star_at_optimum',
                            PASS if winner.omega_star == target else FAIL,
                            float(winner.omega_star - target)))
        checks.append(_side_check(ranked, instance.r))
    return ExtremalReport(p, q, e, instance, tuple(ranked), winner.degrees,
                          None if runner_up is None else runner_up.degrees,
                          winner_is_g_rl, margin, tuple(checks))


def _side_check(records, r):
    """Checks m >= r and n1 + n2 = d_m + e'/k >= r for every vertex a_k of
    every candidate, oriented so that m <= d_1."""
    worst = None
    for record in records:
        degrees = _oriented(record.degrees)
        decomposition = convex_decomposition(list(degrees))
        sides = [degrees.m] + [
            decomposition.base_degree + Fraction(decomposition.excess, k)
            for k in range(1, decomposition.s + 1)]
        slack = min(sides) - r
        if worst is None or slack < worst:
            worst = slack
    return Check('sides_at_least_r', PASS if worst >= 0 else FAIL,
                 float(worst))


def best_two_block_chain(p, q, e):
    """Finds the chain graphs with two distinct degrees of largest lambda_max.

    For h = 2, lambda_max^2 = (e + sqrt(e^2 - 4 omega))/2, so the optimum
    minimizes omega over (m1, m2, n1, n2) with m1 + m2 <= p and
    n1 + n2 <= q.

    Returns:
        A :class:`TwoBlockResult` with the minimal omega, the minimizing
        profiles, their degree sequences and lambda_max.
    """
    value, profiles = min_omega_integer(e, 2, p, q)
    lam = math.sqrt(lambda_sq_upper_bound(e, value))
    return TwoBlockResult(value, profiles,
                          [profile.to_degrees() for profile in profiles], lam)


class DominanceReport(collections.namedtuple(
        'DominanceReport', ('degrees', 'rows', 'tol'),
        defaults=(constants.TOLERANCE,))):
    """Results of :func:`verify_chain_dominance`, one row per n."""
    __slots__ = ()

    @property
    def checks(self):
        checks = []
        for row in self.rows:
            checks.append(Check(f'dominance_n={row.n}', row.status,
                                row.margin))
            margin = row.left_justify_margin
            checks.append(Check(
                f'left_justify_n={row.n}',
                FAIL if margin is not None and margin <= -self.tol else PASS,
                margin))
            checks.append(Check(
                f'maximizers_connected_n={row.n}',
                PASS if row.disconnected_maximizers == 0 else FAIL,
                row.disconnected_maximizers))
        return tuple(checks)

    @property
    def passed(self):
        return all(check.status != FAIL for check in self.checks)

    def to_frame(self):
        return pd.DataFrame([row._asdict() for row in self.rows],
                            columns=DominanceRow._fields)


def _dominance_row(degrees, n, chain_s1, chain_form, tol, budget):
    """Evaluates every matrix with row sums D and n nonzero columns.

    ``attainers`` counts the matrices with the canonical form of the chain
    matrix; ``margin`` is chain sigma_1 minus the best other matrix. Every
    matrix is also compared with its left justification, and every matrix
    within ``tol`` of the chain must have a connected graph.
    """
    count = 0
    attainers = 0
    disconnected = 0
    max_s1 = None
    max_other = None
    justify_margin = None
    matrices = enumerate_row_sum_matrices(degrees, n, budget=budget)
    while True:
        chunk = list(itertools.islice(matrices, DOMINANCE_CHUNK_SIZE))
        if not chunk:
            break
        count += len(chunk)
        values = sigma1_batch(np.stack(chunk))
        justified = sigma1_batch(np.stack([left_justify(a) for a in chunk]))
        lowest = float((justified - values).min())
        justify_margin = lowest if justify_margin is None else \
            min(justify_margin, lowest)
        other = np.ones(len(chunk), bool)
        for index in np.flatnonzero(values >= chain_s1 - tol):
            if not is_connected(chunk[index]):
                disconnected += 1
                log.debug('Disconnected maximizer with components %s.',
                          component_degree_sequences(chunk[index]))
            if n == degrees[0] and \
                    np.array_equal(canonical_form(chunk[index]), chain_form):
                other[index] = False
                attainers += 1
        top = float(values.max())
        max_s1 = top if max_s1 is None else max(max_s1, top)
        if other.any():
            best = float(values[other].max())
            max_other = best if max_other is None else max(max_other, best)
    margin = None if max_other is None else chain_s1 - max_other
    return DominanceRow(n, count, chain_s1, max_s1, attainers, margin,
                        _status(margin, tol), justify_margin, disconnected)


def verify_chain_dominance(degrees, n_min, n_max, tol=constants.TOLERANCE,
                           budget=None, progress=False):
    """Checks that G_D has the largest sigma_1 among graphs with degrees D.

    For every n in [n_min, n_max] all 0-1 matrices with row sums D and no
    zero column are enumerated. None may exceed sigma_1 of the chain matrix,
    and every matrix within ``tol`` of it must have the canonical form of
    the chain matrix. For n > d_1 no matrix has that form, so the chain must
    win strictly. No matrix may beat its own left justification, and no
    matrix attaining sigma_1 of the chain may have a disconnected graph.

    Args:
        degrees: A DegreeSequence or iterable of degrees.
        n_min: The smallest number of columns, n_min >= d_1.
        n_max: The largest number of columns.
        tol: Absolute tolerance on sigma_1.
        budget: Search budget per n; see :func:`enumerate_row_sum_matrices`.
        progress: Whether to show a progress bar over n.

    Returns:
        A :class:`DominanceReport`.

    Raises:
        InvalidInputError: Raised if n_min < d_1 or n_max < n_min.
        ResourceLimitError: Raised if an enumeration exceeds the budget.
    """
    degrees = as_degrees(degrees)
    if n_min < degrees[0] or n_max < n_min:
        raise InvalidInputError(
            f'Expected {degrees[0]} = d_1 <= n_min <= n_max, got '
            f'n_min={n_min}, n_max={n_max}.')
    chain = chain_from_degrees(degrees)
    chain_s1 = sigma1(chain)
    chain_form = canonical_form(chain)
    rows = []
    for n in tqdm(range(n_min, n_max + 1), disable=not progress):
        rows.append(_dominance_row(degrees, n, chain_s1, chain_form, tol,
                                   budget))
        log.debug('D=%s, n=%d: %s', degrees, n, rows[-1])
    return DominanceReport(degrees, tuple(rows), tol)


def verify_monotonicity(degrees, other, tol=constants.TOLERANCE):
    """Whether D > D' implies lambda(G_D) > lambda(G_D') by more than tol.

    Raises:
        InvalidInputError: Raised if D does not dominate D'.
    """
    degrees, other = as_degrees(degrees), as_degrees(other)
    if not dominates(degrees, other):
        raise InvalidInputError(f'{degrees} does not dominate {other}.')
    difference = sigma1(chain_from_degrees(degrees)) - \
        sigma1(chain_from_degrees(other))
    return bool(difference > tol)
