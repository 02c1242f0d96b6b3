"""Exception types shared across the package."""


class InputError(ValueError):
    """Caller-supplied data violates a documented precondition."""


class ParseError(InputError):
    """Malformed instance text; carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class ContractViolation(RuntimeError):
    """An internal invariant failed; indicates a bug, not bad input."""


class SizeCapExceeded(RuntimeError):
    """Exhaustive routines refuse inputs above their configured size cap."""
