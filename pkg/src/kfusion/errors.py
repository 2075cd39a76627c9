"""Error taxonomy shared by every module.

Each exception carries a short human-readable message; the CLI prints them
as "<ClassName>: <message>" on stderr and exits with status 2.
"""


class KfusionError(Exception):
    """Base class for all domain errors raised by this package."""


class InvalidType(KfusionError):
    """Family/rank combination outside the admissible simple types."""


class ResourceLimit(KfusionError):
    """A computation exceeded a configured size bound instead of thrashing."""


class NotScalar(KfusionError):
    """A trace form is not an integer multiple of the basic invariant form."""


class DegenerateTwist(KfusionError):
    """The requested level form is degenerate (level <= 0 or zero form)."""


class SingularInput(KfusionError):
    """A weight that must be regular lies on an affine reflection wall."""


class NoIdentity(KfusionError):
    """The candidate identity class is singular at this level."""


class NonIntegral(KfusionError):
    """An exactly solved structure constant failed to be an integer."""


class SingularShift(KfusionError):
    """A coform shift moved a basis class onto a reflection wall."""


class DimensionMismatch(KfusionError):
    """Coefficient vectors of different lengths were combined."""
