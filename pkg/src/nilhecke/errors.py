"""Exception types shared across the package."""


class NilHeckeError(Exception):
    """Base class for every error raised by this package."""


class RingMismatchError(NilHeckeError):
    pass


class NotDivisibleError(NilHeckeError):
    """An exact division left a remainder or a non-integral quotient."""


class InvariantViolation(NilHeckeError):
    """A computed value contradicts a theorem; signals an arithmetic bug."""


class InvalidTypeError(NilHeckeError):
    """Unknown or unsupported (family, rank, m) combination."""


class CapExceededError(NilHeckeError):
    pass


class UnsupportedError(NilHeckeError):
    pass


class NotReducedError(NilHeckeError):
    pass
