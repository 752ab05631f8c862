"""Exception types shared across the library."""


class KronlimError(Exception):
    """Base class for all library errors."""


class DomainError(KronlimError, ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class ShapeError(KronlimError, ValueError):
    """An array argument has the wrong shape or length."""


class PoleError(DomainError):
    """Evaluation was requested exactly at a pole."""


class ConvergenceError(KronlimError, RuntimeError):
    """A quadrature or series failed to converge within its budget.

    Carries the last two successive estimates so callers can inspect how
    far apart they were.
    """

    def __init__(self, message, previous=None, last=None):
        super().__init__(message)
        self.previous = previous
        self.last = last
