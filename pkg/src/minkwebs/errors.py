"""Shared exception types for the package."""


class MinkwebsError(Exception):
    """Base class for all package-specific errors."""


class NotSelfAdjoint(MinkwebsError):
    """Operator is not self-adjoint with respect to the Minkowski metric."""


class NotPseudoOrthogonal(MinkwebsError):
    """Matrix does not preserve the Minkowski metric."""


class DegenerateAmbiguity(MinkwebsError):
    """Eigenvalue clustering is unstable at the requested tolerance."""


class ComplexSpectrum(MinkwebsError):
    """Point spectrum contains a complex-conjugate pair."""


class DegenerateSpectrum(MinkwebsError):
    """Point spectrum has a repeated eigenvalue."""


class DegenerateTriple(MinkwebsError):
    """Separable triple collides with itself or a fixed eigenvalue."""


class RangeViolation(MinkwebsError):
    """Coordinates fall outside the chart's valid ranges."""


class BadParams(MinkwebsError):
    """Web parameters violate the stated constraints."""


class OutsideRegion(MinkwebsError):
    """Point lies outside the chart's region."""


class OutsideGeodesicFactor(MinkwebsError):
    """Base point has a nonpositive warping function."""


class DegenerateSubspace(MinkwebsError):
    """Subspace is degenerate where a nondegenerate one is required."""


class NotReducible(MinkwebsError):
    """Concircular tensor is not reducible."""


class NoCanonicalPoint(MinkwebsError):
    """The canonical-form constraints for the base point are inconsistent."""


class PoleEncountered(MinkwebsError):
    """Quotient elliptic function evaluated at a pole."""


class ModulusOutOfRange(MinkwebsError):
    """Elliptic modulus outside [0, 1)."""


class NumericalNonConvergence(MinkwebsError):
    """Iterative inversion did not converge / no closed form implemented."""
