"""Exception types shared across the package."""


class LboundError(Exception):
    """Base class for all package errors."""


class DescriptorError(LboundError, ValueError):
    """An L-function descriptor violates one of its structural invariants."""


class DomainError(LboundError, ValueError):
    """An argument lies outside the domain where a formula is valid."""


class ConvergenceError(LboundError, RuntimeError):
    """A truncated series or quadrature did not reach its tolerance."""


class IncompleteDataError(LboundError, ValueError):
    """A zero dataset does not cover the height needed by a computation."""


class ParseError(LboundError, ValueError):
    """A data file could not be parsed."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
