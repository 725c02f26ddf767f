"""Exception types raised by spinfid."""


class SpinFidError(Exception):
    """Base class for all library errors."""


class DomainError(SpinFidError, ValueError):
    """Input outside the physical domain (e.g. superluminal speed)."""


class PreconditionError(SpinFidError, ValueError):
    """An argument violates a documented precondition."""


class InvalidStateError(SpinFidError, ValueError):
    """A matrix is not a valid density matrix within tolerance."""


class ConsistencyError(SpinFidError, ArithmeticError):
    """A computed fidelity fell outside [0, 1]; the moments fed in are bad."""


class ConvergenceError(SpinFidError, ArithmeticError):
    """Adaptive quadrature did not reach the requested tolerance.

    The best available estimate and its error bound are kept on the
    exception so callers can decide whether to use them anyway.
    """

    def __init__(self, message, estimate, error_bound):
        super().__init__(message)
        self.estimate = estimate
        self.error_bound = error_bound
