"""COPD Simulator Module"""

# third-party
import typer

# first-party
from copd_sim.cli.options import FloatList, IntOrNone
from copd_sim.cli.states.states_cli import StatesCli
from copd_sim.exception import ConfigValidationError
from copd_sim.render.render import Render


def command(
    big_delta: FloatList = typer.Option([], '--big-delta', help='Link-weight step Δ.'),
    small_delta: FloatList = typer.Option([], '--small-delta', help='Link-weight bound δ.'),
    curve_points: IntOrNone = typer.Option(
        None, '--curve-points', help='Count Δ = δ·i/K for i = 0..K instead of given Δ values.'
    ),
):
    """Print the number of reachable link-weight states as CSV.

    Columns: big_delta,small_delta,count,values (values space separated).
    """
    cli = StatesCli()
    try:
        for line in cli.rows(cli.pairs(big_delta, small_delta, curve_points)):
            typer.echo(line)
    except ConfigValidationError as ex:
        cli.render_violations(ex)
    except Exception as ex:
        cli.log.exception('Failed to run "copd states" command.')
        Render.panel.failure(f'Exception: {ex}')
