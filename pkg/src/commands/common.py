import csv
import io
import json
import logging
import math
import re
from fractions import Fraction

import click

from src.config import Config
from src.errors import DomainError
from src.models.sides import SideLengths, Space

logger = logging.getLogger(__name__)

# "pi", "pi/2", "3pi/7", "3*pi/7", "1/2 pi", "2/3*pi"
PI_TOKEN = re.compile(
    r'^(?:(?P<num>\d+(?:/\d+)?)\s*\*?\s*)?pi(?:\s*/\s*(?P<den>\d+))?$',
    re.IGNORECASE
)

tolerance_option = click.option(
    '--tol',
    type=float,
    default=Config.DEFAULT_TOL,
    envvar='POLYVOL_TOL',
    show_default=True,
    help='Tolerance (env POLYVOL_TOL; the flag wins)'
)


def parse_token(token):
    """Fraction multiplier of pi for pi tokens, float otherwise"""
    token = token.strip()
    match = PI_TOKEN.match(token)
    if match:
        multiplier = Fraction(match.group('num') or 1)
        if match.group('den'):
            multiplier /= int(match.group('den'))
        return multiplier
    try:
        return float(token)
    except ValueError:
        raise DomainError(f'cannot parse side {token!r}') from None


def parse_values(text):
    """Comma-separated sides as floats (pi tokens allowed)"""
    values = []
    for token in text.split(','):
        value = parse_token(token)
        values.append(float(value) * math.pi if isinstance(value, Fraction) else value)
    return values


def parse_sides(text, space):
    """SideLengths from the --sides flag; all-pi input keeps exact multipliers"""
    if not text.strip():
        raise DomainError('no sides given')
    tokens = [parse_token(t) for t in text.split(',')]
    if space is Space.SPHERICAL and all(isinstance(t, Fraction) for t in tokens):
        return SideLengths.from_pi_multiples(tokens)
    values = parse_values(text)
    if space is Space.SPHERICAL:
        return SideLengths.spherical(values)
    return SideLengths.euclidean(values)


def format_number(value):
    """17 significant digits for floats, enough to read back the same double"""
    return format(float(value), '.17g') if isinstance(value, float) else str(value)


def emit_json(payload):
    click.echo(json.dumps(payload))


def fail(error):
    """One-line JSON diagnostic on stderr, then exit with the error's code"""
    logger.debug(f'{error.code}: {error.message}')
    click.echo(json.dumps(error.to_dict()), err=True)
    click.get_current_context().exit(error.exit_code)


def write_csv(header, rows, path=None):
    """RFC 4180 CSV to ``path`` or stdout"""
    if path:
        with open(path, 'w', newline='', encoding='utf-8') as handle:
            _write_rows(handle, header, rows)
        logger.info(f'Wrote {path}')
    else:
        buffer = io.StringIO(newline='')
        _write_rows(buffer, header, rows)
        click.echo(buffer.getvalue(), nl=False)


def _write_rows(handle, header, rows):
    writer = csv.writer(handle, lineterminator='\r\n')
    writer.writerow(header)
    for row in rows:
        writer.writerow([format_number(v) for v in row])
