"""Exception types raised by corrkit operations."""


class CorrkitError(ValueError):
    """Base class for all corrkit input errors."""


class LengthMismatch(CorrkitError):
    """Two sequences passed to a pairwise operation have different lengths."""


class DegenerateSequence(CorrkitError):
    """Sequence is all-zero (or numerically indistinguishable from it)."""


class InvalidSpec(CorrkitError):
    """Generator parameters are out of range."""


class InvalidShift(CorrkitError):
    """Correlation shift index outside [-(n-1), n-1] or the stated range."""


class InvalidArgument(CorrkitError):
    """Numeric argument outside the domain of the requested operation."""


class FormatError(CorrkitError):
    """Sequence text file does not conform to the on-disk format."""
