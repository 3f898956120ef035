"""Exception hierarchy.

Everything derives from ``FermatError`` (itself a ``ValueError``) so callers
and the CLI can separate invalid input from failed mathematical checks, which
are reported as ``False`` verdicts and never raised.
"""


class FermatError(ValueError):
    pass


class CapacityError(FermatError):
    """An enumeration would exceed the configured size limit."""


class InvalidIndexError(FermatError):
    pass


class DomainError(FermatError):
    pass


class UnsupportedCaseError(FermatError):
    pass


class ParameterMismatchError(FermatError):
    pass


class InvalidSpecError(FermatError):
    pass


class DegreeError(FermatError):
    pass


class InfiniteQuotientError(FermatError):
    """The encoded principal lattice does not have full rank in degree 0."""


class IndexCollisionError(FermatError):
    pass


class DimensionError(FermatError):
    pass


class UnsupportedLevelError(FermatError):
    """Admissibility for q >= 2 needs a tame-symbol condition we do not model."""
