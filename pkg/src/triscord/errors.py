"""Exception types shared across the package."""


class TriscordError(Exception):
    """Base class for all package-specific errors."""


class InvalidParamsError(TriscordError, ValueError):
    """A parameter triple violates the physical-state constraints."""


class NotXStateError(TriscordError, ValueError):
    """A matrix does not have the symmetric X pattern."""


class NotAStateError(TriscordError, ValueError):
    """A matrix is not a valid density matrix (trace or positivity broken)."""


class NumericError(TriscordError, ArithmeticError):
    """A numerical routine failed (non-convergence, negative radicand, ...)."""
