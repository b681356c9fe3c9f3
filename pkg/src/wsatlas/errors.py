"""Exception types shared across the package."""


class WsatlasError(Exception):
    """Base class for all package errors."""


class Empty(WsatlasError):
    """An empty generating set was supplied."""


class NotNumerical(WsatlasError):
    """Generators do not define a numerical semigroup (gcd != 1)."""


class NotMember(WsatlasError):
    """An element required to lie in the semigroup does not."""


class BoundExceeded(WsatlasError):
    """A requested genus bound is above the configured ceiling."""


class ArityMismatch(WsatlasError):
    """Exponent vectors do not match the ring arity."""


class ZeroInput(WsatlasError):
    """A nonzero polynomial was required."""


class InfiniteDimensional(WsatlasError):
    """A graded quotient expected to be finite dimensional is not."""


class GenusTooSmall(WsatlasError):
    """The dimension bounds require genus at least 2."""


class UnknownFormat(WsatlasError):
    """Unsupported export format."""


class UnknownLabel(WsatlasError):
    """Generators do not match any row of the embedded reference table."""


class TimedOut(WsatlasError):
    """A budgeted computation exceeded its wall-clock allowance."""
