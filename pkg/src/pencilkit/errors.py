"""Exception hierarchy. CLI exit codes hang off the two middle classes."""


class PencilError(Exception):
    """Base class for every error raised by pencilkit."""


class DimensionMismatchError(PencilError, ValueError):
    pass


class FormatError(PencilError, ValueError):
    """Malformed file or literal; ``line`` is 1-based when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DomainError(PencilError):
    """Input is well-formed but outside the operation's domain."""


class ReducednessRequiredError(DomainError):
    pass


class EnumerationUnsupportedError(DomainError):
    pass


class EnumerationTooLargeError(DomainError):
    pass


class ExplicitEigenvaluesRequiredError(DomainError):
    pass


class UnsupportedParameterError(DomainError):
    pass


class InvalidProjectivePointError(DomainError, ValueError):
    pass


class NotAnEigenvectorError(DomainError):
    pass


class InvalidWitnessError(DomainError):
    pass


class InvariantViolationError(PencilError, AssertionError):
    """An internal consistency check failed; indicates a bug, not bad input."""
