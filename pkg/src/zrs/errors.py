"""Exception types raised across the package."""


class ZrsError(Exception):
    """Base class for all package-specific errors."""


class SingularMatrix(ZrsError):
    """2x2 matrix has (numerically) vanishing determinant."""


class NotRepresentable(ZrsError):
    """Coefficient quadruple admits no boundary matrix (normalization vanishes)."""


class AtPole(ZrsError):
    """S-matrix evaluation requested at (or too close to) a pole."""


class DegenerateSystem(ZrsError):
    """Linear system for reflection/transmission coefficients is singular."""


class OnImaginaryAxis(ZrsError):
    """Reflection/transmission coefficients undefined for purely imaginary k."""


class InternalInconsistency(ZrsError):
    """Two independent certificates that must agree do not."""


class DegenerateGamma(ZrsError):
    """Real and imaginary parts of the interaction vector are collinear."""


class NotApplicable(ZrsError):
    """Requested construction is outside its applicability conditions."""


class NonConvergent(ZrsError):
    """Numerical transform failed to converge on the truncated domain."""


class AtEigenvalue(ZrsError):
    """Resolvent evaluation requested at a point of the discrete spectrum."""
