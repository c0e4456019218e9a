import math

import click

from src.errors import DomainError, PolyvolError
from src.services.flexibility import regular_volume, regular_volume_derivative
from src.commands.common import fail, tolerance_option, write_csv


def sweep_grid(x_min, x_max, steps):
    """Uniform grid including both endpoints exactly"""
    if not 0 < x_min < x_max < math.pi:
        raise DomainError(f'need 0 < min < max < pi, got min={x_min}, max={x_max}')
    if steps < 2:
        raise DomainError(f'steps must be at least 2, got {steps}')
    width = (x_max - x_min) / (steps - 1)
    return [x_min + i * width for i in range(steps - 1)] + [x_max]


def sweep_rows(n, grid, tol):
    for x in grid:
        yield [x, regular_volume(n, x, tol), regular_volume_derivative(n, x, tol)]


@click.command('sweep')
@click.option('--n', 'n', type=int, required=True, help='Number of sides (>= 4)')
@click.option('--min', 'x_min', type=float, required=True)
@click.option('--max', 'x_max', type=float, required=True)
@click.option('--steps', type=int, default=100, show_default=True)
@click.option('--out', type=click.Path(dir_okay=False, writable=True), default=None)
@tolerance_option
def sweep_command(n, x_min, x_max, steps, out, tol):
    """CSV of the regular-polygon volume V_n(x) and V_n'(x) on a grid."""
    try:
        grid = sweep_grid(x_min, x_max, steps)
        rows = list(sweep_rows(n, grid, tol))
    except PolyvolError as e:
        fail(e)
        return
    write_csv(['x', 'volume', 'dvolume'], rows, out)
