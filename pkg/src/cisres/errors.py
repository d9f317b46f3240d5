"""Exception hierarchy shared by every module of the package."""


class CisError(Exception):
    """Base class for all errors raised by cisres."""


class InstanceMismatchError(CisError, TypeError):
    """Two operands belong to different semiring instances."""


class InvalidParameterError(CisError, ValueError):
    """An instance was requested with unusable parameters."""


class ParseError(CisError, ValueError):
    """A value literal or matrix file could not be parsed."""


class DimensionError(CisError, ValueError):
    """Matrix or exponent-vector shapes do not agree."""


class PreconditionError(CisError, ValueError):
    """An algorithm was called on input violating its precondition.

    ``predicate`` names the check that failed so the CLI can report it.
    """

    def __init__(self, predicate, message=None):
        self.predicate = predicate
        super().__init__(message or f"precondition failed: {predicate}")


class EnumerationLimitError(CisError, ValueError):
    """Exhaustive enumeration requested beyond the configured size guard."""
