"""Exception hierarchy shared across the package."""


class SpinFHError(Exception):
    """Base class for all package-specific errors."""


class OddPartError(SpinFHError):
    """A partition was required to have only even parts."""


class DoesNotFitError(SpinFHError):
    """A class or distinguished element does not fit inside degree n."""


class NonIntegralError(SpinFHError):
    """Interpolation produced non-integer binomial coefficients."""


class InconsistentError(SpinFHError):
    """Validation points disagree with the interpolated polynomial."""


class DegreeExceededError(SpinFHError):
    """A fitted polynomial exceeds its theoretical degree bound."""


class InconsistentLiftError(SpinFHError):
    """Multivector lifts failed the power-of-two proportionality check."""


class NotCentralError(SpinFHError):
    """An element is not in the span of the (even) class-sum basis."""


class ResourceCapError(SpinFHError):
    """A computation would exceed the configured support-size cap."""


class StabilityViolationError(SpinFHError):
    """A coefficient that must be independent of n changed with n."""


class InsufficientOrderError(SpinFHError):
    """A truncated series is too short for the requested coefficient."""


class ZeroIndexError(SpinFHError):
    """Coefficient extraction at index 0 is not defined for inversion."""
