""" Runs the desk-scale acceptance sweeps of the chainspec package.

Every sweep checks one family of results exhaustively or on seeded random
samples and reports the number of cases, failures and the first failing
case. The script exits with status 1 if any sweep has a failure.

Example usage::

    python acceptance.py
    python acceptance.py --only dominance conjecture --workers 4
"""

import argparse
import collections
import itertools
import logging
import math
import sys
import time
from fractions import Fraction

import numpy as np
import pandas as pd
from tqdm import tqdm

from chainspec import bipartite_core as bc
from chainspec import cmatrix
from chainspec import compound_bounds
from chainspec import constants
from chainspec import extremal_opt
from chainspec import spectra
from chainspec.bipartite_core import DegreeSequence, FerrersProfile
from chainspec.extremal_opt import TwoBlockProfile

log = logging.getLogger(__name__)

TOL = constants.TOLERANCE

SweepResult = collections.namedtuple(
    'SweepResult', ('name', 'cases', 'failures', 'first_failure', 'seconds'))


class _Tally():
    """Counts the cases and failures of one sweep."""

    def __init__(self, name):
        self.name = name
        self.cases = 0
        self.failures = 0
        self.first_failure = None
        self._start = time.perf_counter()

    def check(self, ok, description):
        self.cases += 1
        if not ok:
            self.failures += 1
            if self.first_failure is None:
                self.first_failure = description
            log.warning('%s failed: %s', self.name, description)

    def result(self):
        return SweepResult(self.name, self.cases, self.failures,
                           self.first_failure,
                           time.perf_counter() - self._start)


def _random_degrees(rng, max_m, max_d):
    m = rng.randint(1, max_m + 1)
    return DegreeSequence(sorted(rng.randint(1, max_d + 1, m), reverse=True))


def _random_pattern(rng, max_size):
    """A random 0-1 matrix without zero rows or columns."""
    while True:
        m, n = rng.randint(1, max_size + 1, 2)
        if rng.random_sample() < 0.1:
            return np.ones((m, n), np.int64)
        density = rng.uniform(0.3, 1.0)
        matrix = (rng.random_sample((m, n)) < density).astype(np.int64)
        if matrix.sum(axis=1).all() and matrix.sum(axis=0).all():
            return matrix


def _random_dominating_pair(rng, max_m, max_d):
    """Draws D and lowers a prefix of it entrywise to get D' < D."""
    while True:
        degrees = _random_degrees(rng, max_m, max_d)
        m_other = rng.randint(1, degrees.m + 1)
        lowered = np.array(degrees[:m_other]) - rng.randint(0, 3, m_other)
        other = DegreeSequence.from_unsorted(np.clip(lowered, 1, None))
        if bc.dominates(degrees, other):
            return degrees, other


def sweep_sqrt_e(rng, progress=False, samples=1000, max_size=7):
    """sigma_1 <= sqrt(e), with equality exactly for all-ones patterns."""
    tally = _Tally('sqrt_e')
    for _ in tqdm(range(samples), disable=not progress, desc='sqrt_e'):
        matrix = _random_pattern(rng, max_size)
        gap = math.sqrt(matrix.sum()) - spectra.sigma1(matrix)
        complete = bc.is_complete_pattern(matrix)
        tally.check(gap > -TOL and (abs(gap) < TOL) == complete,
                    f'{matrix.tolist()}: gap {gap:.3g}')
    return tally.result()


def sweep_dominance(rng, progress=False, max_m=4, max_d=4, max_e=10,
                    budget=None):
    """The chain matrix has the largest sigma_1 among matrices with its row
    sums, for every number of columns n in [d_1, e]. No matrix beats its left
    justification and every maximizer has a connected graph."""
    tally = _Tally('dominance')
    sequences = [DegreeSequence(d) for m in range(1, max_m + 1)
                 for d in itertools.combinations_with_replacement(
                     range(max_d, 0, -1), m)
                 if sum(d) <= max_e]
    for degrees in tqdm(sequences, disable=not progress, desc='dominance'):
        report = extremal_opt.verify_chain_dominance(
            degrees, degrees[0], degrees.e, budget=budget)
        attained = report.rows[0].attainers > 0
        failed = [check.name for check in report.checks
                  if check.status == extremal_opt.FAIL]
        tally.check(report.passed and attained,
                    f'D={degrees}: failed {failed}, chain attains '
                    f'maximum: {attained}')
    return tally.result()


def sweep_monotonicity(rng, progress=False, pairs=200, max_m=6, max_d=6):
    """D > D' in the dominance order gives lambda(G_D) > lambda(G_D')."""
    tally = _Tally('monotonicity')
    for _ in tqdm(range(pairs), disable=not progress, desc='monotonicity'):
        degrees, other = _random_dominating_pair(rng, max_m, max_d)
        tally.check(extremal_opt.verify_monotonicity(degrees, other),
                    f'D={degrees}, D\'={other}')
    return tally.result()


def sweep_two_degree_exactness(rng, progress=False, max_value=6):
    """lambda_max^2 of a chain graph with two distinct degrees has the
    closed form (e + sqrt(e^2 - 4 m1 m2 r2 (r1 - r2))) / 2."""
    tally = _Tally('h2_exactness')
    grid = [values for values in itertools.product(range(1, max_value + 1),
                                                   repeat=4)
            if values[2] > values[3]]
    for m1, m2, r1, r2 in tqdm(grid, disable=not progress,
                               desc='h2_exactness'):
        degrees = FerrersProfile((r1, r2), (m1, m2)).to_degrees()
        e = degrees.e
        expected = (e + math.sqrt(e * e - 4 * m1 * m2 * r2 * (r1 - r2))) / 2
        actual = spectra.sigma1(bc.chain_from_degrees(degrees)) ** 2
        tally.check(abs(actual - expected) < TOL,
                    f'D={degrees}: {actual} != {expected}')
    actual = spectra.sigma1(bc.chain_from_degrees([5, 5, 4])) ** 2
    tally.check(abs(actual - (7 + math.sqrt(41))) < TOL,
                f'D=5,5,4: {actual} != 7 + sqrt(41)')
    return tally.result()


def _chain_profiles(max_h, max_r, max_multiplicity):
    for h in range(1, max_h + 1):
        for r in itertools.combinations(range(max_r, 0, -1), h):
            for m in itertools.product(range(1, max_multiplicity + 1),
                                       repeat=h):
                yield FerrersProfile(r, m)


def sweep_compound(rng, progress=False, max_h=4, max_r=7,
                   max_multiplicity=3):
    """The second compound reproduces the omega numerator and denominator,
    and omega, omega' <= sigma_1^2 sigma_2^2.

    Profiles have at most ``max_h`` distinct degrees, all at most ``max_r``,
    each repeated at most ``max_multiplicity`` times. Row pair (i1, i2) of
    (second compound) w must equal -d_i2 (d_i1 - d_i2), so each pair of
    distinct degrees r_k > r_l contributes m_k m_l entries -r_l (r_k - r_l)
    and all other entries are zero.
    """
    tally = _Tally('compound')
    profiles = list(_chain_profiles(max_h, max_r, max_multiplicity))
    for profile in tqdm(profiles, disable=not progress, desc='compound'):
        matrix = bc.chain_from_degrees(profile.to_degrees())
        exact = True
        if min(matrix.shape) >= 2:
            compound = compound_bounds.second_compound(matrix)
            w = compound_bounds.nonzero_column_indicator(compound)
            numerator, denominator = compound_bounds.omega_terms(profile)
            weighted = compound @ w
            degrees = profile.to_degrees()
            expected = np.array([-degrees[j] * (degrees[i] - degrees[j])
                                 for i, j in itertools.combinations(
                                     range(degrees.m), 2)])
            exact = (int(w.sum()) == denominator and
                     np.array_equal(weighted, expected) and
                     int((weighted ** 2).sum()) == numerator)
        s1, s2 = spectra.sigma_pair(matrix)
        product = (s1 * s2) ** 2
        bounds = compound_bounds.omega_bounds(profile)
        below = max(bounds.omega, bounds.omega_prime) <= \
            product + constants.OMEGA_TOLERANCE
        tally.check(exact and below,
                    f'{profile}: exact terms {exact}, omega* {bounds} vs '
                    f'{product}')
    bounds = compound_bounds.omega_bounds(bc.ferrers_profile([5, 2, 2, 1]))
    tally.check(bounds.omega == Fraction(90, 7) and
                bounds.omega_prime == Fraction(48, 5),
                f'D=5,2,2,1: {bounds}')
    return tally.result()


def sweep_e3k1(rng, progress=False, max_k=10):
    """For e = 3k + 1 and r = 3 the integer minimum of omega is 2k."""
    tally = _Tally('e3k1')
    for k in tqdm(range(2, max_k + 1), disable=not progress, desc='e3k1'):
        e = 3 * k + 1
        value, _ = extremal_opt.min_omega_e3k1(k)
        exhaustive, argmins = extremal_opt.min_omega_integer(e, 3, e, e)
        ok = value == 2 * k and exhaustive == 2 * k
        if k >= 7:
            ok = ok and argmins == [TwoBlockProfile(1, 2, k, 1),
                                    TwoBlockProfile(k, 1, 1, 2)]
        tally.check(ok, f'k={k}: min {exhaustive} at {argmins}')
    return tally.result()


CONTINUOUS_INSTANCES = ((2, 5), (2, 9), (3, 14), (3, 26), (4, 23))


def sweep_continuous(rng, progress=False, instances=CONTINUOUS_INSTANCES,
                     max_e=60):
    """The numerical continuous minimum matches (r - 1)(e - r + 1)/r, and
    the integer minimum is never below it, with equality exactly when
    (e - r + 1)/r is an integer, for r in {2, 3, 4} and e up to ``max_e``."""
    tally = _Tally('continuous')
    pairs = [(r, e) for r in (2, 3, 4) for e in range(r * r + 1, max_e + 1)]
    for r, e in tqdm(pairs, disable=not progress, desc='integer_bound'):
        exact, _ = extremal_opt.min_omega_continuous(r, e)
        integer, _ = extremal_opt.min_omega_integer(e, r, e, e)
        tight = (e - r + 1) % r == 0
        tally.check(integer >= exact and (integer == exact) == tight,
                    f'r={r}, e={e}: integer {integer}, continuous {exact}')
    for r, e in tqdm(instances, disable=not progress, desc='continuous'):
        exact, solutions = extremal_opt.min_omega_continuous(r, e)
        value, profile = extremal_opt.grid_min_omega_continuous(r, e)
        distance = min(max(abs(float(a) - b) for a, b in zip(s, profile))
                       for s in solutions)
        tally.check(abs(value - float(exact)) < 1e-6 and distance < 1e-3,
                    f'r={r}, e={e}: {value} at {profile}, expected {exact}')
    return tally.result()


CONJECTURE_INSTANCES = ((2, 2), (2, 3), (3, 3), (3, 4), (4, 4))


def sweep_conjecture(rng, progress=False, instances=CONJECTURE_INSTANCES,
                     workers=1):
    """G_{r,l+1} is the unique extremal graph for every admissible (p, q)."""
    tally = _Tally('conjecture')
    cases = [(r, l, p, q) for r, l in instances
             for p, q in extremal_opt.admissible_instances(r, l)]
    for r, l, p, q in tqdm(cases, disable=not progress, desc='conjecture'):
        e = r * l + r - 1
        report = extremal_opt.verify_conjecture(p, q, e, workers=workers)
        ok = report.passed and report.winner_is_g_rl and \
            (report.margin is None or report.margin > TOL)
        tally.check(ok, f'p={p}, q={q}, e={e}: winner {report.winner}, '
                        f'margin {report.margin}')
    return tally.result()


def sweep_cmatrix(rng, progress=False, samples=500, max_m=6, max_d=8):
    """A(d) A(d)^T = M(d), the trace identities, and
    lambda_1 <= maxest <= est1."""
    tally = _Tally('cmatrix')
    for _ in tqdm(range(samples), disable=not progress, desc='cmatrix'):
        d = list(_random_degrees(rng, max_m, max_d))
        chain = bc.chain_from_degrees(d)
        gram = np.array_equal(chain @ chain.T, cmatrix.build_cmatrix(d))
        values = cmatrix.cmatrix_eigenvalues(d)
        identities = cmatrix.trace_identities(d)
        pairs = (values.sum() ** 2 - (values ** 2).sum()) / 2
        traces = (abs(values.sum() - identities.e) < 1e-8 and
                  abs((values ** 2).sum() - identities.s2) < 1e-8 and
                  abs(pairs - identities.beta) < 1e-8)
        top = values[0]
        est1 = cmatrix.bound_est1(d)
        if len(set(d)) >= 2:
            maxest = cmatrix.bound_maxest(d)
            bounds = top <= maxest + TOL and maxest <= est1 + TOL
            if len(set(d)) == 2:
                bounds = bounds and abs(top - maxest) < TOL
        else:
            bounds = top <= est1 + TOL
        tally.check(gram and traces and bounds,
                    f'd={d}: gram {gram}, traces {traces}, bounds {bounds}')
    return tally.result()


def sweep_vertex(rng, progress=False, samples=200, max_m=6, max_d=8):
    """The vertex decomposition re-sums to d and its closed-form vertex
    eigenvalues bound lambda_1(M(d))."""
    tally = _Tally('vertex')
    done = 0
    with tqdm(total=samples, disable=not progress, desc='vertex') as bar:
        while done < samples:
            d = list(_random_degrees(rng, max_m, max_d))
            if len(set(d)) < 2:
                continue
            decomposition = cmatrix.convex_decomposition(d)
            m = len(d)
            resum = [sum(alpha * vertex[i] for alpha, vertex in
                         zip(decomposition.coefficients,
                             decomposition.vertices))
                     for i in range(m)] == d
            closed_form = all(
                abs(cmatrix.vertex_eigenvalue(
                    vertex, m, k, decomposition.base_degree,
                    decomposition.excess) -
                    cmatrix.cmatrix_eigenvalues(vertex)[0]) < TOL
                for k, vertex in enumerate(decomposition.vertices, start=1))
            top = cmatrix.cmatrix_eigenvalues(d)[0]
            bounded = top <= cmatrix.vertex_bound(d) + TOL
            tally.check(resum and closed_form and bounded,
                        f'd={d}: resum {resum}, closed form {closed_form}, '
                        f'bounded {bounded}')
            done += 1
            bar.update()
    return tally.result()


SWEEPS = collections.OrderedDict([
    ('sqrt_e', sweep_sqrt_e),
    ('dominance', sweep_dominance),
    ('monotonicity', sweep_monotonicity),
    ('h2_exactness', sweep_two_degree_exactness),
    ('compound', sweep_compound),
    ('e3k1', sweep_e3k1),
    ('continuous', sweep_continuous),
    ('conjecture', sweep_conjecture),
    ('cmatrix', sweep_cmatrix),
    ('vertex', sweep_vertex),
])


def run_sweeps(names=None, seed=0, workers=1, progress=True):
    """Runs the named sweeps, all by default, in their listed order.

    Returns:
        A pandas DataFrame with one row per sweep and a ``passed`` column.
    """
    names = list(SWEEPS) if not names else names
    rng = np.random.RandomState(seed)
    results = []
    for name in names:
        kwargs = {'workers': workers} if name == 'conjecture' else {}
        results.append(SWEEPS[name](rng, progress=progress, **kwargs))
        log.info('%s: %d cases, %d failures', name, results[-1].cases,
                 results[-1].failures)
    frame = pd.DataFrame(results, columns=SweepResult._fields)
    frame['passed'] = frame['failures'] == 0
    return frame


def get_parser():
    ''' Generates the command line argument parser. '''
    parser = argparse.ArgumentParser(
        description='Run the chainspec acceptance sweeps and print a summary '
                    'table. Example usage: \n'
                    'python acceptance.py --only e3k1 continuous')
    parser.add_argument(
        '--only', nargs='+', choices=list(SWEEPS), default=None,
        help='Names of the sweeps to run. Defaults to all of them.')
    parser.add_argument(
        '--seed', type=int, default=0,
        help='Seed of the random samples.')
    parser.add_argument(
        '--workers', type=int, default=1,
        help='Number of worker processes for the conjecture sweep.')
    parser.add_argument(
        '--quiet', action='store_true', help='Hide the progress bars.')
    return parser


def main(argv=None):
    args = get_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO,
                        format='%(levelname)s %(name)s: %(message)s')
    frame = run_sweeps(args.only, seed=args.seed, workers=args.workers,
                       progress=not args.quiet)
    print(frame.to_string(index=False))
    return 0 if frame['passed'].all() else 1


if __name__ == '__main__':
    sys.exit(main(sys.argv[1:]))
