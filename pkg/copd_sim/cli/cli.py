"""COPD Simulator Module"""

# third-party
import typer

# first-party
from copd_sim import __version__
from copd_sim.cli.run import run
from copd_sim.cli.states import states
from copd_sim.cli.sweep import sweep
from copd_sim.cli.validate import validate
from copd_sim.render.render import Render


def version_callback(
    version: bool = typer.Option(False, '--version', help='Display the version and exit.')
):
    """Display the version and exit."""
    if version is True:
        Render.table.key_value('Version Data', {'COPD Simulator': __version__})
        raise typer.Exit()


# initialize typer
app = typer.Typer(callback=version_callback, invoke_without_command=True)
app.command('run')(run.command)
app.command('states')(states.command)
app.command('sweep')(sweep.command)
app.command('validate')(validate.command)


if __name__ == '__main__':
    app()
