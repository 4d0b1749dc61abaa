"""Tests for ConsoleFormatter."""

from pathlib import Path
from unittest.mock import Mock

import pytest
from rich.console import Console

from augmoments.formatters import ConsoleFormatter


class TestConsoleFormatter:
    """Test suite for ConsoleFormatter class."""

    @pytest.fixture
    def mock_logger(self):
        """Create a mock logger for testing."""
        return Mock()

    @pytest.fixture
    def console(self):
        """A wide recording console so tables are not wrapped."""
        return Console(record=True, width=200, force_terminal=False)

    @pytest.fixture
    def formatter(self, mock_logger, console):
        return ConsoleFormatter(mock_logger, console)

    def test_init(self, mock_logger):
        """Test ConsoleFormatter initialization."""
        formatter = ConsoleFormatter(mock_logger)
        assert formatter.logger is mock_logger
        assert formatter.console is not None

    def test_display_table(self, formatter, console):
        """Test that headers and rows are rendered and floats are shortened."""
        formatter.display_table("rank sweep", ["amplitude", "rank"], [[0.0, 0], [1.23456789, 7]])
        text = console.export_text()
        assert "rank sweep" in text
        assert "amplitude" in text
        assert "1.23457" in text
        assert "1.23456789" not in text

    def test_display_summary(self, formatter, console):
        """Test that the summary names the command, its time and its outputs."""
        experiment = Mock()
        experiment.config.command = "variance-map"
        experiment.wall_time_s = 1.5
        experiment.outputs = [Path("var.pgm")]
        formatter.display_summary(experiment)
        text = console.export_text()
        assert "variance-map (1.50 s)" in text
        assert "var.pgm" in text

    def test_display_message(self, formatter, mock_logger):
        """Test that plain messages go to the logger."""
        formatter.display_message("Done")
        mock_logger.info.assert_called_once_with("Done")
