class BuckleError(Exception):
    """Base class for errors raised by this package."""


class ValidationError(BuckleError, ValueError):
    """Input data violates a documented invariant."""


class NotPositiveDefiniteError(BuckleError, ValueError):
    pass


class IllConditionedBasisError(BuckleError):
    """The Galerkin Dirichlet matrix failed to factor; use a smaller basis."""


class IncompatibleSpectrumError(BuckleError, ValueError):
    """A sphere bound was asked for eigenvalues with rho_i <= n - 2."""


class DegenerateGapsError(BuckleError, ValueError):
    pass
