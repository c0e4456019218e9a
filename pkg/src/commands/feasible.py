import click

from src.errors import PolyvolError
from src.models.sides import Space
from src.models.volume import Verdict
from src.services.euclidean import euclidean_feasibility
from src.services.spherical import spherical_feasibility
from src.commands.common import emit_json, fail, parse_sides

EXIT_CODES = {
    Verdict.INTERIOR: 0,
    Verdict.BOUNDARY: 3,
    Verdict.EMPTY: 4
}


@click.command('feasible')
@click.option('--space', type=click.Choice([s.value for s in Space]), default=Space.SPHERICAL.value, show_default=True)
@click.option('--sides', required=True, help='Comma-separated side-lengths')
@click.pass_context
def feasible_command(ctx, space, sides):
    """Check whether polygons with these sides exist (exit 0 interior, 3 boundary, 4 empty)."""
    try:
        r = parse_sides(sides, Space(space))
        report = spherical_feasibility(r) if r.space is Space.SPHERICAL else euclidean_feasibility(r)
    except PolyvolError as e:
        fail(e)
        return
    emit_json({'space': r.space.value, 'n': r.n, **report.to_dict()})
    ctx.exit(EXIT_CODES[report.verdict])
