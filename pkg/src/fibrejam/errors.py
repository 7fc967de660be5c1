"""Exception types shared across the package.

Every error raised on a documented failure path derives from
:class:`FibreJamError`, so callers can distinguish expected model/solver
failures from genuine bugs. Subclassing ``ValueError`` keeps generic
callers (``except ValueError``) working.
"""


class FibreJamError(ValueError):
    """Base class for all package-level errors."""


class DomainError(FibreJamError):
    """Input outside the physical domain of an operation (e.g. stretch < 1)."""


class UnsupportedMaterialError(FibreJamError):
    """Operation not defined for this material variant (e.g. rigid)."""


class InsufficientDataError(FibreJamError):
    """Too few data points for the requested fit."""


class EmptyInputError(FibreJamError):
    """An operation received an empty collection."""


class GeometryError(FibreJamError):
    """Invalid fibre bundle geometry (overlapping positions, bad lengths)."""


class ResolutionError(FibreJamError):
    """Mesh resolution too coarse for the requested discretization."""


class ClassificationError(FibreJamError):
    """Unknown material pairing at a friction interface."""


class DegenerateInputError(FibreJamError):
    """Input is rank-deficient for the requested fit (e.g. repeated abscissae)."""


class ConfigurationError(FibreJamError):
    """Invalid configuration value or an unsolvable model setup."""


class StateError(FibreJamError):
    """Operation requires a converged solver state."""


class InfeasibleError(FibreJamError):
    """Optimization initial guess violates the bounds."""


class EvaluationError(FibreJamError):
    """A residual function returned non-finite values.

    Carries the offending parameter vector in ``parameters``.
    """

    def __init__(self, message, parameters=None):
        super().__init__(message)
        self.parameters = parameters


class ConvergenceError(FibreJamError):
    """Newton iteration failed at a load step.

    Carries the curve computed so far (``partial_curve``) and the index of
    the failing step (``step_index``).
    """

    def __init__(self, message, partial_curve=None, step_index=None):
        super().__init__(message)
        self.partial_curve = partial_curve
        self.step_index = step_index


class IntegratorAccuracyError(FibreJamError):
    """Explicit time integration step too large (energy drift check failed)."""
