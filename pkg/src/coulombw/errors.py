"""Exception taxonomy shared across the library."""


class CoulombwError(Exception):
    """Base class for all library-specific errors."""


class PoleError(CoulombwError, ValueError):
    """Evaluation requested at (or within snap distance of) a pole."""


class BranchError(CoulombwError, ValueError):
    """A point on the branch cut was used without an edge tag."""


class DomainError(CoulombwError, ValueError):
    """Argument outside the mathematical domain of the operation."""


class PreconditionError(CoulombwError, ValueError):
    """A documented precondition of the operation is violated."""


class NonConvergenceError(CoulombwError, RuntimeError):
    """Iteration cap hit before the requested tolerance was reached.

    Carries the best available value so callers may decide to keep it.
    """

    def __init__(self, message, value=None, err_est=None):
        super().__init__(message)
        self.value = value
        self.err_est = err_est


class SpectrumHit(CoulombwError, RuntimeError):
    """-k^2 lies in the spectrum: the resolvent denominator vanished."""

    def __init__(self, message, k=None):
        super().__init__(message)
        self.k = k


class SolverDiverged(CoulombwError, RuntimeError):
    """A single root-polishing run failed; the seed is dropped."""


class StepperFailure(CoulombwError, RuntimeError):
    """The ODE integrator broke down (singular blow-up or step underflow)."""


class GridTooCoarse(CoulombwError, RuntimeError):
    """Richardson extrapolation of the FD spectrum did not stabilize."""
