"""Typed exceptions raised across the augmoments package."""


class AugmomentsError(Exception):
    """Base class for every error raised by augmoments."""


class RangeError(AugmomentsError, IndexError):
    """An index or count lies outside its valid range."""


class ArgumentError(AugmomentsError, ValueError):
    """An argument is invalid (non-finite parameter, wrong arity, bad literal)."""


class ShapeError(AugmomentsError, ValueError):
    """Array shapes or grids do not agree."""


class UnsupportedOperationError(AugmomentsError, NotImplementedError):
    """The operation is not defined for this input (e.g. the density of a Dirac)."""


class NumericalError(AugmomentsError, ArithmeticError):
    """A numerical routine failed; carries the condition number when known."""

    def __init__(self, message: str, condition_number: float | None = None):
        super().__init__(message)
        self.condition_number = condition_number


class FormatError(AugmomentsError, ValueError):
    """A file does not follow the expected binary or text format."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (at byte offset {offset})"
        super().__init__(message)
        self.offset = offset


class UsageError(ArgumentError):
    """The command line is malformed; the CLI exits with status 2."""
