"""
Exception Types

Every documented precondition violation raises one of these. Verification failures are not exceptions, they are
entries in a VerificationReport (see octograd.results).
"""


class OctogradError(Exception):
    """Base type for all errors raised by octograd."""


class FieldError(OctogradError, ArithmeticError):
    """Raised for division by zero or for values that are not elements of the expected subfield."""


class DimensionMismatch(OctogradError, ValueError):
    """Raised when vectors, matrices, or subspaces have incompatible shapes."""


class PreconditionError(OctogradError, ValueError):
    """Raised when an operation's documented precondition does not hold. The message names the precondition."""


class GroupError(OctogradError, ValueError):
    """Raised for mismatched parent groups and for enumeration of infinite groups."""


class CodecError(OctogradError, ValueError):
    """Raised when a JSON document cannot be decoded into an octograd object."""
