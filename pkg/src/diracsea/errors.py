"""Exception hierarchy shared by every numerical routine in the package."""


class DiracSeaError(Exception):
    """Base class; the CLI maps subclasses onto exit codes."""


class InvalidParams(DiracSeaError, ValueError):
    pass


class DomainError(DiracSeaError, ValueError):
    pass


class NumericalFailure(DiracSeaError, ArithmeticError):
    """Something converged badly or not at all."""


class NonConvergence(NumericalFailure):
    pass


class StepLimitExceeded(NumericalFailure):
    pass


class SeedRegimeViolation(NumericalFailure):
    pass


class IdentityMismatch(NumericalFailure):
    pass


class CutoffTooSmall(NumericalFailure):
    pass
