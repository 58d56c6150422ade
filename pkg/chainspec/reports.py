"""Rendering of command results as JSON, CSV or text tables.

Every command produces a report dictionary with the keys ``command``,
``input``, ``result`` and ``checks``. Floats are written with a fixed number
of significant digits and exact rationals as ``'a/b'`` strings, so equal
inputs give byte-identical output.
"""

import json
import math
import numbers
from fractions import Fraction

import numpy as np
import pandas as pd

from chainspec import constants
from chainspec.bipartite_core import DegreeSequence
from chainspec.chainspec_exceptions import InvalidInputError
from chainspec.cmatrix import CVector


def format_float(value, digits=constants.FLOAT_DIGITS):
    """Rounds a float to ``digits`` significant digits.

    Non-finite values become None.
    """
    value = float(value)
    if not math.isfinite(value):
        return None
    return float(f'{value:.{digits}g}')


def to_jsonable(value):
    """Converts results to JSON-compatible Python values.

    Namedtuples become dictionaries, degree sequences their text format,
    Fractions an int or an ``'a/b'`` string, and floats are rounded by
    :func:`format_float`.
    """
    if value is None or isinstance(value, (bool, str)):
        return value
    if isinstance(value, np.bool_):
        return bool(value)
    if isinstance(value, DegreeSequence):
        return str(value)
    if isinstance(value, CVector):
        return [to_jsonable(x) for x in value]
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return int(value)
        return f'{value.numerator}/{value.denominator}'
    if isinstance(value, numbers.Integral):
        return int(value)
    if isinstance(value, numbers.Real):
        return format_float(value)
    if isinstance(value, np.ndarray):
        return [to_jsonable(x) for x in value.tolist()]
    if isinstance(value, tuple) and hasattr(value, '_asdict'):
        return {key: to_jsonable(item)
                for key, item in value._asdict().items()}
    if isinstance(value, dict):
        return {str(key): to_jsonable(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(item) for item in value]
    raise TypeError(f'Cannot serialize {type(value).__name__}.')


def build_report(command, inputs, result, checks=()):
    """Assembles the report dictionary in its fixed key order."""
    return {
        'command': command,
        'input': to_jsonable(inputs),
        'result': to_jsonable(result),
        'checks': [{'name': check.name,
                    'status': check.status,
                    'margin': to_jsonable(check.margin)}
                   for check in checks],
    }


def dump_json(report):
    """Serializes a report; parsing and dumping again gives the same text."""
    return json.dumps(report, indent=2, ensure_ascii=False) + '\n'


def dump_csv(frame, columns):
    """Writes the ranking columns of a DataFrame as CSV text."""
    if frame is None:
        raise InvalidInputError('CSV output is only available for candidate '
                                'rankings.')
    return frame[columns].to_csv(
        index=False, float_format=f'%.{constants.FLOAT_DIGITS}g')


def _text_value(value):
    if isinstance(value, (dict, list)):
        return json.dumps(value, ensure_ascii=False)
    return str(value)


def dump_text(report, frame=None):
    """Renders a report as aligned text tables.

    Args:
        report: A report dictionary from :func:`build_report`.
        frame: An optional DataFrame, e.g. a candidate ranking, appended
            after the result.

    Returns:
        The text, ending with a newline.
    """
    lines = [f"command: {report['command']}"]
    for section in ('input', 'result'):
        items = report[section]
        if not items:
            continue
        lines.append(f'{section}:')
        width = max(len(key) for key in items)
        for key, value in items.items():
            lines.append(f'  {key:<{width}}  {_text_value(value)}')
    if frame is not None and not frame.empty:
        lines.append('')
        lines.append(frame.to_string(index=False))
    if report['checks']:
        lines.append('')
        checks = pd.DataFrame(report['checks'],
                              columns=['name', 'status', 'margin'])
        lines.append(checks.to_string(index=False))
    return '\n'.join(lines) + '\n'
