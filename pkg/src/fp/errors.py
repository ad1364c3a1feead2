"""
Exceptions raised by the prime-field helpers.
"""


class FieldError(Exception):
    """Base class for F_p errors."""


class NotPrimeError(FieldError):
    pass


class UnsupportedPrimeError(FieldError):
    """The prime is outside the range an operation supports."""


class ConicPreconditionError(FieldError):
    pass


class ConicInvariantError(FieldError):
    """A conic that must be solvable produced no solution."""


class UnknownFamilyError(FieldError):
    pass


class UnknownPredicateError(FieldError):
    pass
