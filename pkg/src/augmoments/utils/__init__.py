"""Logging, search paths and worker counts shared across augmoments."""

from .logger import LOG_LEVEL_ENV_VAR, MomentsLogger, get_default_logger, set_verbosity
from .path_resolution import list_files, resolve_path
from .threads import THREADS_ENV_VAR, resolve_threads

__all__ = [
    "LOG_LEVEL_ENV_VAR",
    "MomentsLogger",
    "get_default_logger",
    "set_verbosity",
    "list_files",
    "resolve_path",
    "THREADS_ENV_VAR",
    "resolve_threads",
]
