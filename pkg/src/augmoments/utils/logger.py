"""Package logger: a single stream handler on "augmoments", level from AUGMOMENTS_LOG_LEVEL."""

# stdlib
import logging
from os import getenv
from typing import Protocol

LOG_LEVEL_ENV_VAR = "AUGMOMENTS_LOG_LEVEL"


class MomentsLogger(Protocol):
    """What the numerical routines and the Experiment need from a logger."""

    def debug(self, msg: str, *args, **kwargs) -> None: ...

    def info(self, msg: str, *args, **kwargs) -> None: ...

    def warning(self, msg: str, *args, **kwargs) -> None: ...

    def error(self, msg: str, *args, **kwargs) -> None: ...


class LevelPrefixFormatter(logging.Formatter):
    """Bare messages up to INFO; warnings and errors are prefixed with their level."""

    def format(self, record: logging.LogRecord) -> str:
        message = super().format(record)
        if record.levelno >= logging.WARNING:
            return f"{record.levelname.lower()}: {message}"
        return message


def env_level() -> int:
    """Level named by AUGMOMENTS_LOG_LEVEL; INFO when unset or unknown."""
    name = (getenv(LOG_LEVEL_ENV_VAR) or "INFO").upper()
    return logging.getLevelNamesMapping().get(name, logging.INFO)


def get_default_logger(name: str = "augmoments") -> logging.Logger:
    """
    Get the package logger, attaching its handler on first use.

    Args:
        name: The logger name. Defaults to "augmoments".

    Returns:
        A configured Logger instance writing to stderr.
    """
    logger = logging.getLogger(name)
    if not logger.handlers:
        handler = logging.StreamHandler()
        handler.setFormatter(LevelPrefixFormatter("%(message)s"))
        logger.addHandler(handler)
        logger.setLevel(env_level())
    return logger


def set_verbosity(verbose: bool, name: str = "augmoments") -> logging.Logger:
    """DEBUG when verbose, otherwise the environment level."""
    logger = get_default_logger(name)
    logger.setLevel(logging.DEBUG if verbose else env_level())
    return logger
