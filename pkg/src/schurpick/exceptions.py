"""Exception hierarchy for schurpick."""


class SchurPickError(ValueError):
    """Base class for all errors raised by this package."""


class OutsideDisk(SchurPickError):
    """A point required to lie in the (open or closed) unit disk does not."""


class DegenerateBracket(SchurPickError):
    """``[z, w]`` requested for two distinct points of the unit circle."""


class PoleHit(SchurPickError):
    """A Moebius map was evaluated at its pole."""


class DegenerateMap(SchurPickError):
    """Inverse requested for a constant (degenerate) Moebius map."""


class UnboundedImage(SchurPickError):
    """The image of the closed disk under a Moebius map is not a bounded disk."""


class BaseMismatch(SchurPickError):
    pass


class OrderMismatch(SchurPickError):
    pass


class DivisionByZeroSeries(SchurPickError):
    """Denominator jet vanishes identically up to the truncation order."""


class NonRemovableSingularity(SchurPickError):
    """Numerator has fewer leading zeros than the denominator."""


class ZeroOutsideDisk(OutsideDisk):
    pass


class UnvalidatedFunction(SchurPickError):
    """A polynomial leaf has not passed :func:`validate_bounded`."""


class UnimodularValue(SchurPickError):
    """|f(z)| = 1, so the invariant derivatives are undefined."""


class DegenerateDenominator(SchurPickError):
    pass


class GammaOutOfRange(SchurPickError):
    pass


class InconsistentData(SchurPickError):
    """Data violate the Schwarz-Pick inequality."""


class HypothesisViolated(SchurPickError):
    pass


class InfeasibleData(SchurPickError):
    """No bounded analytic function interpolates the data."""


class VerdictDisagreement(SchurPickError):
    """The Pick-matrix test and the Schur recursion disagree."""
