"""Exception types raised across the package."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class ConvergenceError(ArithmeticError):
    """An iterative method exhausted its budget.

    Attributes:
        estimate: Best value available when the budget ran out.
        error_estimate: Error bound attached to ``estimate``.
    """

    def __init__(self, message, estimate=float("nan"), error_estimate=float("inf")):
        super().__init__(message)
        self.estimate = estimate
        self.error_estimate = error_estimate


class DegenerateFitError(DomainError):
    """A rule point admits no unique Pareto index."""


class UnboundedAlphaError(DegenerateFitError):
    """Effect share equals cause share: no concentration, alpha diverges."""


class IndeterminateAlphaError(DegenerateFitError):
    """Effect share is 1: every alpha <= 1 reproduces the point."""
