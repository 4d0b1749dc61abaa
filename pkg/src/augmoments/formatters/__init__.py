"""Formatting utilities for exceptions and console output."""

from .console_formatter import ConsoleFormatter as ConsoleFormatter
from .format_exception import format_exception as format_exception
