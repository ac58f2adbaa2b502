"""Exception hierarchy shared by every module of the package."""


class SeriationError(Exception):
    """Base class for all errors raised by :mod:`multifiedler`."""


class NonConvergence(SeriationError):
    pass


class DisconnectedGraph(SeriationError):
    pass


class DimensionMismatch(SeriationError, ValueError):
    pass


class BadParameter(SeriationError, ValueError):
    pass


class TooLarge(SeriationError):
    pass


class ExplosionGuard(SeriationError):
    """Raised when a tie expansion or frontier would exceed the configured cap."""


class MultipleFiedler(SeriationError):
    pass


class DegenerateBasis(SeriationError):
    pass


class UnsupportedMultiplicity(SeriationError):
    pass
