"""Exception types shared across the package."""


class CVNetError(Exception):
    """Base class for all cvnet errors."""


class DomainError(CVNetError):
    """An input is outside its documented range."""


class NonPositiveInput(DomainError):
    """A strictly positive scalar was required."""


class IndexOutOfRange(CVNetError, IndexError):
    """A mode index does not exist in the matrix."""


class NonPositiveDefinite(CVNetError):
    """Covariance matrix is not positive definite."""


class PairingFailure(CVNetError):
    """Eigenvalue moduli of the symplectic spectrum failed to pair up."""


class SingularMeasurement(CVNetError):
    """Measured quadrature has (numerically) zero variance."""


class Unstable(CVNetError):
    """Element parameters do not admit a stationary state."""


class SingularResolvent(CVNetError):
    """Transfer-function resolvent is singular at the requested frequency."""


class CriteriaDisagreement(CVNetError):
    """Algebraic and spectral stability tests disagree; indicates a fault."""


class SingularAliceBlock(CVNetError):
    """Alice covariance block is too ill-conditioned to invert."""


class ZeroConductivity(CVNetError):
    """Dispersion relation undefined for vanishing conductivity."""


class NearSingularDenominator(CVNetError):
    """Perturbed dispersion evaluated too close to the mode cutoff."""


class BranchWarning(UserWarning):
    """Complex-log argument is close to the branch cut; results may jump."""


class ConfigError(CVNetError):
    """Configuration file failed validation."""


class UnknownPreset(ConfigError):
    """Requested preset name does not exist."""


class ComputeError(CVNetError):
    """A sweep point could not be evaluated."""
