"""Exception types raised by the library."""


class HyperZetaError(Exception):
    """Base class for all library errors."""


class DomainError(HyperZetaError, ValueError):
    """An argument lies outside the domain an operation supports."""


class PoleError(DomainError):
    """The requested point is (numerically) a pole."""


class ConvergenceError(HyperZetaError, ArithmeticError):
    """An iterative method or quadrature failed to reach its tolerance."""


class InsufficientRootsError(HyperZetaError):
    """A root-sum needs more roots than were supplied or allowed."""


class BracketError(HyperZetaError):
    """A bracketing interval does not show the sign change it should."""
