"""Console formatter for run summaries."""

from __future__ import annotations

from typing import TYPE_CHECKING

from rich.console import Console
from rich.table import Table

if TYPE_CHECKING:
    from augmoments.Experiment import Experiment
    from augmoments.utils import MomentsLogger


class ConsoleFormatter:
    """Renders experiment results as rich tables.

    Keeps presentation out of the Experiment and the commands, which only
    log and return data.
    """

    def __init__(self, logger: MomentsLogger, console: Console | None = None):
        """Initialize the console formatter.

        Args:
            logger: Logger for plain messages
            console: Rich console; stdout when omitted
        """
        self.logger = logger
        self.console = console or Console()

    def display_table(self, title: str, header: list[str], rows: list[list]) -> None:
        """Display rows under a header; floats use 6 significant digits."""
        table = Table(title=title)
        for column in header:
            table.add_column(column)
        for row in rows:
            table.add_row(*(f"{v:.6g}" if isinstance(v, float) else str(v) for v in row))
        self.console.print(table)

    def display_summary(self, experiment: Experiment) -> None:
        """Display the outputs and timing of a finished run."""
        self.display_table(
            f"{experiment.config.command} ({experiment.wall_time_s:.2f} s)",
            ["output"],
            [[str(path)] for path in experiment.outputs],
        )

    def display_message(self, message: str) -> None:
        self.logger.info(message)
