"""Exception types shared across the package."""


class SwkbError(Exception):
    """Base class for all package-specific errors."""


class DomainError(SwkbError, ValueError):
    """An evaluation point lies outside the function's domain (x <= 0)."""


class ParameterError(SwkbError, ValueError):
    """A model parameter violates its admissible range."""


class NoTurningPoints(SwkbError):
    """No classically allowed region exists for the requested energy."""


class MultipleRoots(SwkbError):
    """More than two positive roots were bracketed; all brackets are attached."""

    def __init__(self, message, brackets):
        super().__init__(message)
        self.brackets = list(brackets)


class NegativeIntegrand(SwkbError):
    """The integrand went substantially negative inside the integration interval."""


class NoConvergence(SwkbError):
    """Adaptive refinement exhausted its budget without meeting the tolerance."""


class PrecisionInsufficient(SwkbError):
    """The quadrature error estimate is too large for the requested difference quotient."""


class GridTooCoarse(SwkbError):
    """The eigenvalue grid cannot support the requested tolerance."""


class MissedState(SwkbError):
    """Node-count bookkeeping detected a skipped or degenerate bound state."""
