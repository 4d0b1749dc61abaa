"""Exception text for the CLI: one line by default, a trimmed traceback when verbose."""

# stdlib
import traceback
from collections.abc import Callable


def _summary(exc: BaseException) -> str:
    """`Type: message`, followed by the direct cause when its message adds something."""
    text = f"{type(exc).__name__}: {exc}"
    cause = exc.__cause__
    if cause is not None and str(cause) not in str(exc):
        text += f" (caused by {type(cause).__name__}: {cause})"
    return text


def format_exception(exc: BaseException, function: Callable | None = None, verbose: bool = False) -> str:
    """Format an exception for stderr.

    Args:
        exc: The exception to format.
        function: When verbose, frames above this function's frame are dropped.
        verbose: Full traceback instead of the one-line summary.
    """
    if not verbose:
        return _summary(exc)

    report = traceback.TracebackException.from_exception(exc)
    if function is not None:
        names = [frame.name for frame in report.stack]
        if function.__name__ in names:
            report.stack = traceback.StackSummary.from_list(report.stack[names.index(function.__name__) :])
    return "".join(report.format()).strip()
