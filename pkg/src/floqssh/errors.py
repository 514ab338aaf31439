"""Exception types shared across the package."""


class FloqsshError(Exception):
    """Base class for all package-specific failures."""


class ConfigError(FloqsshError):
    """Bad configuration input. Message names the offending key or path."""


class NumericalError(FloqsshError):
    """A numerical routine could not deliver its contract."""


class GapClosedError(NumericalError):
    """A determinant or Hamiltonian became singular along the contour.

    This signals a phase boundary, not a bug.  ``where`` carries the
    offending momentum or parameter value when known.
    """

    def __init__(self, message, where=None):
        super().__init__(message)
        self.where = where


class BranchCutError(NumericalError):
    """An eigenvalue sits on the logarithm branch cut (negative real axis)."""


class ConvergenceError(NumericalError):
    """An iterative solver failed to converge; never silent."""
