"""Worker-count resolution shared by the CLI and the parallel helpers."""

# stdlib
from os import getenv

# third party
from joblib import cpu_count

THREADS_ENV_VAR = "AUGMOMENTS_THREADS"


def resolve_threads(threads: int | None = None) -> int:
    """Return the worker count: explicit value, else AUGMOMENTS_THREADS, else machine parallelism."""
    if threads is None:
        env_value = getenv(THREADS_ENV_VAR)
        if env_value:
            threads = int(env_value)
    if threads is None:
        threads = cpu_count()
    if threads < 1:
        raise ValueError(f"thread count must be >= 1, got {threads}")
    return threads
