"""Exception hierarchy shared by every ocl_forge module."""


class OclForgeError(Exception):
    """Base class for all library errors."""


class ParseError(OclForgeError, ValueError):
    """Malformed text input; ``position`` is a 0-based character offset or line number."""

    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at {position})"
        super().__init__(message)


class WidthMismatch(OclForgeError, ValueError):
    pass


class ShapeMismatch(OclForgeError, ValueError):
    pass


class FactorTooLarge(OclForgeError, ValueError):
    """A line cannot be divided by the requested power of D."""


class DegenerateMatrix(OclForgeError, ValueError):
    """An all-zero row or column makes the requested operation meaningless."""


class AdvanceUnderflow(OclForgeError, ValueError):
    """Advancing a subsequence would discard nonzero symbols."""


class Infeasible(OclForgeError):
    """Raised when a configured resource cap would be exceeded."""


class TrellisTooLarge(Infeasible):
    pass


class TooManyPaths(Infeasible):
    pass


class NoAdmissiblePath(OclForgeError):
    pass
