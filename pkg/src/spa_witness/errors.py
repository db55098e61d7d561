"""Exception types raised across the package.

Everything inherits from :class:`SpaWitnessError` so callers can catch the
whole family with one clause.  Validation-style errors (bad input, broken
preconditions) and numerical failures (eigensolver breakdown, lost realness)
are kept as distinct classes because the command line maps them to different
exit codes.
"""


class SpaWitnessError(Exception):
    """Base class for all errors raised by this package."""


class DimensionMismatch(SpaWitnessError):
    """Subsystem or matrix dimensions are inconsistent."""


class NotHermitian(SpaWitnessError):
    """A matrix failed the Hermiticity check; message reports the worst entry."""


class ConvergenceFailure(SpaWitnessError):
    """An eigensolver did not converge or produced an inconsistent result."""


class NonRealResult(SpaWitnessError):
    """A quantity that must be real carried too large an imaginary part."""


class WeightSumError(SpaWitnessError):
    """Ensemble weights are not a probability distribution."""


class NotADensity(SpaWitnessError):
    """An operator failed density validation (unit trace, positivity)."""


class NotAWitness(SpaWitnessError):
    """The requested construction cannot be an entanglement witness."""


class ExceedsCmax(SpaWitnessError):
    """The offset c exceeds the estimated product-state infimum of sigma."""


class NotNegative(SpaWitnessError):
    """The operator has no negative eigenvalue, so it detects nothing."""


class EstimateMissing(SpaWitnessError):
    """An operation needed a cached c_max estimate that was never computed."""


class DifferentSigma(SpaWitnessError):
    """Two witnesses do not share the same sigma and cannot be compared."""


class ZeroTrace(SpaWitnessError):
    """Normalization by trace is impossible (trace vanishes)."""


class ParseError(SpaWitnessError):
    """An operator file is malformed; message points at the first violation."""


class InvalidParams(SpaWitnessError):
    """Family parameters are outside their allowed range."""


class InvalidGrid(SpaWitnessError):
    """A scan grid specification could not be interpreted."""
