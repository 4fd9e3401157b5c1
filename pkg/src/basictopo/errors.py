"""Exception types shared across the package."""


class BasicTopoError(Exception):
    """Base class for every error raised by this library."""


class CarrierMismatchError(BasicTopoError):
    """Values built over different carriers were combined."""


class UnknownElementError(BasicTopoError):
    """An atom is not an element of the carrier at hand."""


class UnknownRuleError(BasicTopoError):
    """A rule id does not occur in the relevant element's rule list."""


class NonMonotoneOperatorError(BasicTopoError):
    """Fixed-point iteration detected a non-monotone operator."""


class BoundExceededError(BasicTopoError):
    """A combinatorial safety bound was exceeded (carrier size, choice functions)."""


class UnderivableError(BasicTopoError):
    """No derivation exists for the requested element."""


class NotPositiveError(BasicTopoError):
    """The requested element is outside the coinductive predicate."""


class ProofError(BasicTopoError):
    """A proof object handed to a recursor or translator is invalid."""


class DocumentError(BasicTopoError):
    """An on-disk document is malformed; ``location`` points at the offending spot."""

    def __init__(self, message: str, location: str = ""):
        self.location = location
        super().__init__(f"{location}: {message}" if location else message)
