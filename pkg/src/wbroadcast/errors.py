"""Exception types shared across the package."""


class WBroadcastError(Exception):
    """Base class for all package errors."""


class DimensionError(WBroadcastError):
    """Matrix or vector dimensions are invalid for the requested operation."""


class HermiticityError(WBroadcastError):
    """Matrix is not Hermitian within tolerance."""

    def __init__(self, defect, row, col, tol):
        self.defect = defect
        self.row = row
        self.col = col
        self.tol = tol
        super().__init__(
            "matrix is not Hermitian: max asymmetry %.3e at (%d, %d) "
            "exceeds tolerance %.3e" % (defect, row, col, tol)
        )


class ConvergenceError(WBroadcastError):
    """Iterative eigensolver did not reach its stopping tolerance."""


class LabelError(WBroadcastError):
    """Qubit labels are missing, duplicated, or otherwise inconsistent."""


class NormalizationError(WBroadcastError):
    """State norm or operator trace violates the declared invariant."""


class InvariantError(WBroadcastError):
    """A domain invariant is violated."""


class ConfigError(WBroadcastError):
    """User-supplied configuration is invalid."""
