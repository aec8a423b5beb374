"""Exception hierarchy.

Every exception carries a short ``code`` used by the command line front-end
as a machine-parseable prefix on error lines.
"""


class ToricNashError(Exception):
    code = "Error"


class InvalidInput(ToricNashError, ValueError):
    code = "InvalidInput"


class EmptyInput(InvalidInput):
    code = "EmptyInput"


class NonPositiveElement(InvalidInput):
    code = "NonPositiveElement"


class GcdNotOne(InvalidInput):
    code = "GcdNotOne"


class SingletonInput(InvalidInput):
    code = "SingletonInput"


class AlreadySmooth(ToricNashError, ValueError):
    """The input already contains 1; there is nothing left to resolve."""

    code = "AlreadySmooth"


class IterationCap(ToricNashError, RuntimeError):
    """Raised when a loop that is proved to terminate runs past its cap."""

    code = "IterationCap"


class LatticeNotFull(InvalidInput):
    code = "LatticeNotFull"


class OriginInHull(InvalidInput):
    code = "OriginInHull"


class DuplicateVector(InvalidInput):
    code = "DuplicateVector"


class DimensionMismatch(InvalidInput):
    code = "DimensionMismatch"


class SingularPivot(InvalidInput):
    code = "SingularPivot"


class UnsupportedDimension(ToricNashError, ValueError):
    code = "UnsupportedDimension"


class MalformedInput(InvalidInput):
    """Text that does not parse as a curve set or a vector list."""

    code = "MalformedInput"


class InvariantFailure(ToricNashError, AssertionError):
    code = "InvariantFailure"
