import logging

import click

from src.errors import DomainError, PolyvolError
from src.models.sides import Space
from src.services.euclidean import euclidean_closed_form
from src.services.spherical import spherical_closed_form, witten_series
from src.commands.common import emit_json, fail, parse_sides, tolerance_option

logger = logging.getLogger(__name__)


def compute_volume(r, method, tol):
    """JSON payload for the volume command"""
    payload = r.to_dict()
    payload['method'] = method

    if r.space is Space.EUCLIDEAN:
        if method not in ('closed', 'both'):
            raise DomainError(f"method '{method}' is only available for spherical polygons")
        payload.update(euclidean_closed_form(r).to_dict())
        payload['method'] = method
        return payload

    if method == 'series':
        payload.update(witten_series(r, tol).to_dict())
    elif method == 'exact':
        payload.update(spherical_closed_form(r, exact=True).to_dict())
    else:
        closed = spherical_closed_form(r)
        payload.update(closed.to_dict())
        if method == 'both':
            series = witten_series(r, tol)
            payload['series_value'] = series.value
            payload['series_error_bound'] = series.error_bound
            payload['discrepancy'] = abs(series.value - closed.value)
    payload['method'] = method
    return payload


@click.command('volume')
@click.option('--space', type=click.Choice([s.value for s in Space]), default=Space.SPHERICAL.value, show_default=True)
@click.option('--sides', required=True, help='Comma-separated side-lengths; "pi/2", "3pi/7" tokens allowed')
@click.option('--method', type=click.Choice(['series', 'closed', 'both', 'exact']), default='closed', show_default=True)
@tolerance_option
def volume_command(space, sides, method, tol):
    """Symplectic volume of the polygon moduli space."""
    try:
        r = parse_sides(sides, Space(space))
        payload = compute_volume(r, method, tol)
    except PolyvolError as e:
        fail(e)
        return
    logger.info(f"Volume {payload['value']} for {r.n} sides by {method}")
    emit_json(payload)
