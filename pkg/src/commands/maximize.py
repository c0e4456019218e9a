import json

import click

from src.config import Config
from src.errors import DomainError, PolyvolError
from src.services.flexibility import maximize_flexibility
from src.commands.common import emit_json, fail, parse_values, tolerance_option, write_csv


@click.command('maximize')
@click.option('--n', 'n', type=int, required=True, help='Number of sides')
@click.option('--perimeter', type=float, required=True, help='Fixed perimeter P < n*pi')
@click.option('--start', default=None, help='Comma-separated start point; random interior point if omitted')
@click.option('--seed', type=int, default=Config.DEFAULT_SEED, show_default=True, help='Seed for the random start')
@click.option('--max-iter', type=int, default=Config.OPTIMIZER_MAX_ITER, show_default=True)
@click.option('--out', type=click.Path(dir_okay=False, writable=True), default=None, help='Trace CSV path')
@tolerance_option
def maximize_command(n, perimeter, start, seed, max_iter, out, tol):
    """Averaging iteration toward the most flexible polygon of fixed perimeter.

    The trace (iter,x_1..x_n,volume) goes to --out, or to stdout with the
    JSON summary on stderr.
    """
    try:
        if n < 3:
            raise DomainError(f'n must be at least 3, got {n}')
        start_point = parse_values(start) if start else None
        trace = maximize_flexibility(n, perimeter, start=start_point, tol=tol, max_iterations=max_iter, seed=seed)
    except PolyvolError as e:
        fail(e)
        return

    write_csv(trace.header(), trace.rows(), out)
    if out:
        emit_json(trace.to_dict())
    else:
        click.echo(json.dumps(trace.to_dict()), err=True)
