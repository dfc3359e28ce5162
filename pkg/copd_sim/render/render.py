"""COPD Simulator Module"""
# standard library
from collections.abc import Mapping

# third-party
import typer
from rich.console import Console
from rich.panel import Panel
from rich.progress import BarColumn, MofNCompleteColumn, Progress, TextColumn
from rich.table import Column, Table

# diagnostics go to stderr so stdout only carries the one-line summary
console = Console()
err_console = Console(stderr=True)


class RenderPanel:
    """Rich panels."""

    title_align = 'left'

    @classmethod
    def failure(cls, message: str, exit_code: int = 2):
        """Render a failure panel on stderr and exit."""
        err_console.print(
            Panel(message, border_style='bold red', title='Failure', title_align=cls.title_align)
        )
        raise typer.Exit(code=exit_code)

    @classmethod
    def list(cls, title: str, items: list[str], style: str = ''):
        """Render a bulleted list on stderr."""
        if items:
            body = '\n'.join(f'• {item}' for item in items)
            err_console.print(
                Panel(body, border_style=style, title=title, title_align=cls.title_align)
            )


class RenderTable:
    """Rich tables."""

    @staticmethod
    def key_value(title: str, data: Mapping, key_width: int = 24, value_width: int = 60):
        """Render a two column key/value table on stderr."""
        table = Table(expand=True, border_style='dim', show_edge=False, show_header=False)
        table.add_column(
            'key', justify='left', max_width=key_width, min_width=key_width, style='dodger_blue1'
        )
        table.add_column(
            'value', justify='left', max_width=value_width, min_width=value_width, style='bold'
        )
        for key, value in data.items():
            table.add_row(str(key), str(value))
        err_console.print(Panel(table, border_style='', title=title, title_align='left'))


class Render:
    """COPD Simulator Module"""

    accent = 'dark_orange'
    panel = RenderPanel
    table = RenderTable

    @classmethod
    def progress_bar(cls) -> Progress:
        """Return a transient progress bar on stderr."""
        return Progress(
            TextColumn('{task.description}', table_column=Column(ratio=1)),
            BarColumn(
                bar_width=None,
                complete_style=cls.accent,
                finished_style=cls.accent,
                style=f'dim {cls.accent}',
                table_column=Column(ratio=2),
            ),
            MofNCompleteColumn(),
            console=err_console,
            expand=True,
            transient=True,
        )

    @staticmethod
    def summary(line: str):
        """Print the one-line result summary on stdout."""
        console.print(line, highlight=False, markup=False, soft_wrap=True)
