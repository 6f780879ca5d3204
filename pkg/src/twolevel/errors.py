"""Exception hierarchy shared by all modules."""


class TwoLevelError(Exception):
    """Base class for every error raised by this package."""


class InputError(TwoLevelError, ValueError):
    """Malformed or inconsistent input."""


class EmptyInput(InputError):
    pass


class DimensionMismatch(InputError):
    pass


class BadParams(InputError):
    pass


class NameClash(InputError):
    pass


class NotReduced(InputError):
    pass


class NotAVertex(InputError):
    pass


class InvalidPair(InputError):
    """Some vertex violates some inequality."""


class SizeGuardExceeded(TwoLevelError):
    pass


class DimensionGuardExceeded(SizeGuardExceeded):
    pass


class Unbounded(TwoLevelError):
    pass


class OriginNotInterior(TwoLevelError):
    pass


class NonInjectiveOnHull(TwoLevelError):
    pass


class NotPerfect(TwoLevelError):
    pass


class NotStable(TwoLevelError):
    pass


class Disconnected(TwoLevelError):
    pass


class SharedElementInvalid(InputError):
    pass


class NonBinaryIntegerPoints(TwoLevelError):
    pass


class VerificationError(TwoLevelError, AssertionError):
    """An internal cross-check between two independent routes disagreed."""
