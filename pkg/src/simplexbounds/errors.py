"""Exception hierarchy shared by the library and the CLI.

Each class carries the CLI exit code it maps to.
"""


class SimplexBoundsError(Exception):
    exit_code = 1


class ValidationError(SimplexBoundsError, ValueError):
    """An input sequence, vector or ideal fails a required invariant."""

    exit_code = 2


class PreconditionError(SimplexBoundsError, ValueError):
    """Inputs are individually valid but outside the range a bound covers."""

    exit_code = 3


class SizeLimitError(SimplexBoundsError):
    """An oracle computation exceeds the configured vertex/generator limit."""

    exit_code = 4


class BoundViolation(SimplexBoundsError):
    """An oracle value exceeds the corresponding bound."""

    exit_code = 5
