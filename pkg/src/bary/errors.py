"""Exception hierarchy.

Every error raised by the library derives from :class:`BaryError`, which is
itself a :class:`ValueError` so that callers validating input can catch the
usual type.
"""


class BaryError(ValueError):
    pass


class InvalidBasis(BaryError):
    pass


class PositionOutOfRange(BaryError):
    pass


class FireUnderflow(BaryError):
    pass


class UnfireUnderflow(BaryError):
    pass


class InconsistentValue(BaryError):
    pass


class InvalidShotVector(BaryError):
    pass


class IncPreconditionViolated(BaryError):
    pass


class NotInP(BaryError):
    pass


class DivisibilityViolated(BaryError):
    pass


class ZeroArgument(BaryError):
    pass


class InsufficientChips(BaryError):
    pass


class IntegralityViolated(BaryError):
    pass


class CapExceeded(BaryError):
    """A configured resource limit (node count, oracle size, ...) was hit."""
