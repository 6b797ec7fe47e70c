"""Exception types raised across the package."""


class CGraphError(ValueError):
    """Base class for every domain error raised by cgraphs."""


class NotPrime(CGraphError):
    def __init__(self, p):
        super().__init__(f"{p} is not a prime modulus")
        self.p = p


class ModulusMismatch(CGraphError):
    pass


class ZeroInverse(CGraphError, ZeroDivisionError):
    pass


class WhiteColorRequested(CGraphError):
    """Raised when color 0 (white, i.e. no edge) is passed where a real color is needed."""


class VertexOutOfRange(CGraphError, IndexError):
    pass


class NotAPartition(CGraphError):
    pass


class EdgeAbsent(CGraphError):
    pass


class LengthMismatch(CGraphError):
    pass


class SizeMismatch(CGraphError):
    pass


class TooLarge(CGraphError):
    pass


class TooSmall(CGraphError):
    pass


class TooFewEdges(CGraphError):
    pass


class BudgetExceeded(CGraphError):
    pass


class PreconditionViolated(CGraphError):
    pass


class InvalidArgs(CGraphError):
    pass


class NotBipartite(CGraphError):
    pass


class ColorConventionViolated(CGraphError):
    pass


class NotSquare(CGraphError):
    pass


class ParseError(CGraphError):
    """Malformed text input; ``line`` is the 1-based line number when known."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
