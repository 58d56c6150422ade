"""Command line interface to the chainspec computations and verifiers.

Example usage::

    chainspec lambda --degrees 5,2,2,1 --format json
    chainspec min-omega --e 22 --r 3
    chainspec verify-conjecture --p 3 --q 5 --e 14

Exit codes are 0 on success, 1 when a verification fails, 2 on a usage or
input error and 3 when an enumeration budget is exceeded.
"""

import argparse
import collections
import logging
import sys

from chainspec import constants
from chainspec import extremal_opt
from chainspec import reports
from chainspec.bipartite_core import (DegreeSequence, chain_from_degrees,
                                      conjugate_profile,
                                      enumerate_chain_candidates,
                                      ferrers_profile)
from chainspec.chainspec_exceptions import (InvalidInputError,
                                            NumericDomainError,
                                            ResourceLimitError,
                                            VerificationError)
from chainspec.cmatrix import (bound_est1, bound_maxest, cmatrix_eigenvalues,
                               trace_identities, vertex_bound)
from chainspec.compound_bounds import chain_upper_bound, omega_bounds
from chainspec.spectra import spectral_summary

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3

# Commands whose output is a candidate ranking.
CSV_COMMANDS = ('verify-conjecture', 'enumerate')

RunConfig = collections.namedtuple(
    'RunConfig', ('command', 'parameters', 'output_format', 'tolerance',
                  'budget', 'workers', 'verbose'))


def _degrees_arg(text):
    try:
        return DegreeSequence.parse(text)
    except InvalidInputError as err:
        raise argparse.ArgumentTypeError(str(err))


def _positive_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f'{text!r} is not an integer.')
    if value < 1:
        raise argparse.ArgumentTypeError(f'{text!r} is not positive.')
    return value


def get_parser():
    """Generates the command line argument parser."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        '--format', dest='output_format', default='text',
        choices=('text', 'json', 'csv'),
        help='Output format. CSV is only available for candidate rankings.')
    common.add_argument(
        '--tolerance', type=float, default=constants.TOLERANCE,
        help='Absolute tolerance for strict spectral comparisons.')
    common.add_argument(
        '--budget', type=_positive_int, default=None,
        help='Search budget of exhaustive enumerations. Overrides the '
             f'{constants.BUDGET_ENV_VAR} environment variable.')
    common.add_argument(
        '--workers', type=_positive_int, default=1,
        help='Number of worker processes for candidate evaluation.')
    common.add_argument(
        '--verbose', action='store_true', help='Log debug messages.')

    parser = argparse.ArgumentParser(
        prog='chainspec',
        description='Largest eigenvalues of bipartite chain graphs, omega '
                    'minimization and exhaustive verification of the '
                    'extremal graphs.')
    subparsers = parser.add_subparsers(dest='command', metavar='command')
    subparsers.required = True

    sub = subparsers.add_parser(
        'lambda', parents=[common],
        help='Largest eigenvalue of the chain graph of a degree sequence.')
    sub.add_argument('--degrees', type=_degrees_arg, required=True,
                     help='Comma-separated degrees, e.g. 5,2,2,1.')

    sub = subparsers.add_parser(
        'bounds', parents=[common],
        help='Omega and C-matrix bounds for the chain graph of a degree '
             'sequence.')
    sub.add_argument('--degrees', type=_degrees_arg, required=True,
                     help='Comma-separated degrees, e.g. 5,2,2,1.')

    sub = subparsers.add_parser(
        'min-omega', parents=[common],
        help='Minimize omega = m1 m2 n1 n2 under the edge constraint.')
    sub.add_argument('--e', type=_positive_int, help='Number of edges.')
    sub.add_argument('--r', type=_positive_int, help='Side lower bound.')
    sub.add_argument('--p', type=_positive_int,
                     help='Bound on m1 + m2. Defaults to e.')
    sub.add_argument('--q', type=_positive_int,
                     help='Bound on n1 + n2. Defaults to e.')
    sub.add_argument('--mode', default='integer',
                     choices=('integer', 'continuous', 'e3k1'),
                     help='Which problem to solve.')
    sub.add_argument('--k', type=_positive_int,
                     help='k of e = 3k + 1 for --mode e3k1.')

    for name, text in (('verify-conjecture',
                        'Rank all chain candidates of K(p, q, e).'),
                       ('enumerate',
                        'List the chain candidates of K(p, q, e).')):
        sub = subparsers.add_parser(name, parents=[common], help=text)
        sub.add_argument('--p', type=_positive_int, required=True,
                         help='Size of the smaller side.')
        sub.add_argument('--q', type=_positive_int, required=True,
                         help='Size of the larger side.')
        sub.add_argument('--e', type=_positive_int, required=True,
                         help='Number of edges.')

    sub = subparsers.add_parser(
        'verify-dominance', parents=[common],
        help='Check that the chain graph maximizes lambda among graphs '
             'with the given degrees.')
    sub.add_argument('--degrees', type=_degrees_arg, required=True,
                     help='Comma-separated degrees, e.g. 3,2,1.')
    sub.add_argument('--n-min', type=_positive_int, required=True,
                     help='Smallest number of columns.')
    sub.add_argument('--n-max', type=_positive_int, required=True,
                     help='Largest number of columns.')
    return parser


def parse_args(argv=None):
    """Parses and validates command line arguments.

    Args:
        argv: The argument list without the program name. Defaults to
            ``sys.argv[1:]``.

    Returns:
        A :class:`RunConfig`.

    Raises:
        SystemExit: With exit code 2 on a usage error.
    """
    parser = get_parser()
    args = parser.parse_args(argv)
    parameters = {key: value for key, value in vars(args).items()
                  if key not in ('command', 'output_format', 'tolerance',
                                 'budget', 'workers', 'verbose')}
    if args.command == 'min-omega':
        if args.mode == 'e3k1':
            if args.k is None:
                parser.error('--k is required with --mode e3k1')
        else:
            for flag in ('e', 'r'):
                if parameters[flag] is None:
                    parser.error(f'--{flag} is required with --mode '
                                 f'{args.mode}')
    if args.output_format == 'csv' and args.command not in CSV_COMMANDS:
        parser.error(f'--format csv is only available for '
                     f'{" and ".join(CSV_COMMANDS)}')
    if args.tolerance <= 0:
        parser.error('--tolerance must be positive')
    return RunConfig(args.command, parameters, args.output_format,
                     args.tolerance, args.budget, args.workers, args.verbose)


def _run_lambda(config):
    degrees = config.parameters['degrees']
    summary = spectral_summary(chain_from_degrees(degrees))
    bound = chain_upper_bound(degrees, tol=config.tolerance)
    result = {
        'degrees': degrees,
        'e': summary.e,
        'lambda_max': summary.sigma1,
        'lambda_max_sq': summary.sigma1 ** 2,
        'sigma2': summary.sigma2,
        'sqrt_e_gap': summary.sqrt_e_gap,
        'omega_star': bound.omega_star,
        'lambda_sq_upper_bound': bound.upper_bound,
    }
    checks = [extremal_opt.Check(
        'sqrt_e_bound',
        extremal_opt.PASS if summary.sqrt_e_gap > -config.tolerance
        else extremal_opt.FAIL, summary.sqrt_e_gap)]
    return result, checks, None


def _run_bounds(config):
    degrees = config.parameters['degrees']
    profile = ferrers_profile(degrees)
    bounds = omega_bounds(profile)
    bound = chain_upper_bound(degrees, tol=config.tolerance)
    identities = trace_identities(list(degrees))
    result = {
        'degrees': degrees,
        'e': degrees.e,
        'r': list(profile.r),
        'm': list(profile.m),
        'h': profile.h,
        'conjugate_r': list(conjugate_profile(profile).r),
        'conjugate_m': list(conjugate_profile(profile).m),
        'omega': bounds.omega,
        'omega_prime': bounds.omega_prime,
        'omega_star': bounds.omega_star,
        'lambda_sq': bound.lambda_sq,
        'lambda_sq_upper_bound': bound.upper_bound,
        'slack': bound.slack,
        'trace_e': identities.e,
        'trace_s2': identities.s2,
        'trace_beta': identities.beta,
        'est1': bound_est1(list(degrees)),
    }
    checks = [extremal_opt.Check(
        'omega_star_bound',
        extremal_opt.PASS if bound.slack > -config.tolerance
        else extremal_opt.FAIL, bound.slack)]
    if profile.h == 2:
        checks.append(extremal_opt.Check(
            'two_degree_exactness',
            extremal_opt.PASS if abs(bound.slack) < config.tolerance
            else extremal_opt.FAIL, bound.slack))
    if profile.h >= 2:
        lambda_1 = float(cmatrix_eigenvalues(list(degrees))[0])
        result['maxest'] = bound_maxest(list(degrees))
        result['vertex_bound'] = vertex_bound(list(degrees))
        for name in ('maxest', 'vertex_bound'):
            margin = result[name] - lambda_1
            checks.append(extremal_opt.Check(
                name, extremal_opt.PASS if margin > -config.tolerance
                else extremal_opt.FAIL, margin))
    return result, checks, None


def _run_min_omega(config):
    parameters = config.parameters
    mode = parameters['mode']
    checks = []
    if mode == 'e3k1':
        value, argmins = extremal_opt.min_omega_e3k1(parameters['k'])
        result = {'e': 3 * parameters['k'] + 1, 'min': value,
                  'argmins': argmins}
        checks.append(extremal_opt.Check(
            'min_equals_2k', extremal_opt.PASS, value - 2 * parameters['k']))
    elif mode == 'continuous':
        value, solutions = extremal_opt.min_omega_continuous(
            parameters['r'], parameters['e'])
        result = {'min': value, 'solutions': solutions}
    else:
        e = parameters['e']
        p = parameters['p'] or e
        q = parameters['q'] or max(e, p)
        value, argmins = extremal_opt.min_omega_integer(
            e, parameters['r'], p, q)
        result = {'min': value, 'argmins': argmins}
    return result, checks, None


def _run_verify_conjecture(config):
    parameters = config.parameters
    report = extremal_opt.verify_conjecture(
        parameters['p'], parameters['q'], parameters['e'],
        tol=config.tolerance, workers=config.workers)
    winner = report.candidates[0]
    result = {
        'instance': report.instance,
        'winner': report.winner,
        'lambda_max': winner.lambda_max,
        'lambda_max_sq': winner.lambda_max ** 2,
        'omega_star': winner.omega_star,
        'runner_up': report.runner_up,
        'margin': report.margin,
        'winner_is_g_rl': report.winner_is_g_rl,
        'candidates': len(report.candidates),
    }
    return result, list(report.checks), report.to_frame()


def _run_verify_dominance(config):
    parameters = config.parameters
    report = extremal_opt.verify_chain_dominance(
        parameters['degrees'], parameters['n_min'], parameters['n_max'],
        tol=config.tolerance, budget=config.budget)
    result = {'degrees': report.degrees, 'rows': list(report.rows)}
    return result, list(report.checks), report.to_frame()


def _run_enumerate(config):
    parameters = config.parameters
    candidates = enumerate_chain_candidates(
        parameters['p'], parameters['q'], parameters['e'])
    records = extremal_opt.evaluate_candidates(candidates,
                                               workers=config.workers)
    frame = extremal_opt.ExtremalReport(
        parameters['p'], parameters['q'], parameters['e'], None,
        tuple(records), None, None, None, None, ()).to_frame()
    result = {'count': len(candidates), 'candidates': candidates}
    return result, [], frame


_RUNNERS = {
    'lambda': _run_lambda,
    'bounds': _run_bounds,
    'min-omega': _run_min_omega,
    'verify-conjecture': _run_verify_conjecture,
    'verify-dominance': _run_verify_dominance,
    'enumerate': _run_enumerate,
}


def run(config, stream=None):
    """Runs a command and writes its report.

    Args:
        config: A :class:`RunConfig`.
        stream: The output stream. Defaults to ``sys.stdout``.

    Returns:
        The exit code.
    """
    stream = sys.stdout if stream is None else stream
    try:
        config = config._replace(budget=constants.get_budget(config.budget))
        result, checks, frame = _RUNNERS[config.command](config)
    except ResourceLimitError as err:
        sys.stderr.write(f'chainspec: {err}\n')
        return EXIT_RESOURCE
    except VerificationError as err:
        sys.stderr.write(f'chainspec: verification failed: {err}\n')
        return EXIT_FAILED
    except (InvalidInputError, NumericDomainError) as err:
        sys.stderr.write(f'chainspec: {err}\n')
        return EXIT_USAGE
    report = reports.build_report(config.command, config.parameters, result,
                                  checks)
    if config.output_format == 'json':
        stream.write(reports.dump_json(report))
    elif config.output_format == 'csv':
        stream.write(reports.dump_csv(frame, extremal_opt.RANKING_COLUMNS))
    else:
        stream.write(reports.dump_text(report, frame))
    failed = [check.name for check in checks
              if check.status == extremal_opt.FAIL]
    if failed:
        log.info('Failed checks: %s', ', '.join(failed))
        return EXIT_FAILED
    return EXIT_OK


def main(argv=None):
    config = parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if config.verbose else logging.WARNING,
        format='%(levelname)s %(name)s: %(message)s')
    return run(config)


if __name__ == '__main__':
    sys.exit(main())
