"""Exception types shared across the library."""


class CpfactorError(Exception):
    """Base class for all cpfactor-specific failures."""


class InapplicableMatrixError(CpfactorError):
    """The input violates a precondition: wrong graph shape, reducible,
    negative entries, or not completely positive."""


class EigensolverError(CpfactorError):
    """The Jacobi iteration did not converge, or a returned eigenpair
    failed its residual bound."""


class ToleranceBreakdownError(CpfactorError):
    """Numerical thresholds contradict each other; any answer would be
    unreliable at the configured tolerance."""
