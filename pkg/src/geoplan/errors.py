"""Exception types shared across the package.

The CLI maps each of these to a distinct exit code.
"""


class GeoplanError(Exception):
    """Base class for all package errors."""


class UsageError(GeoplanError, ValueError):
    """An operation was called outside its precondition."""


class FormatError(GeoplanError, ValueError):
    """Malformed text input (graph, bimatrix, word or sequence)."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class BudgetExceeded(GeoplanError):
    """A search would exceed its configured budget; nothing was truncated silently."""


class InternalInconsistency(GeoplanError):
    """A mathematical guarantee failed to hold; indicates a bug."""


class MultipleSurfacesError(GeoplanError):
    """A polygon system whose gluing yields more than one surface."""
