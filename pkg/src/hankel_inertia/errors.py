"""Exception hierarchy. `exit_code` is what the CLI returns for each class."""


class HankelError(Exception):
    exit_code = 1


class MalformedSpec(HankelError, ValueError):
    """Input file or argument could not be parsed."""


class DimensionMismatch(HankelError, ValueError):
    pass


class NotSelfAdjoint(HankelError, ValueError):
    """A kernel, symbol or sequence that does not define a self-adjoint operator."""

    exit_code = 2


class DomainError(HankelError, ValueError):
    exit_code = 3


class InvalidExponent(DomainError):
    """Re(alpha) <= 0, or an exponent of the wrong kind for the operation."""


class NotReal(DomainError):
    pass


class DegenerateLeading(DomainError):
    pass


class NotSignMatrix(DomainError):
    pass


class ShapeViolation(DomainError):
    pass


class SingularSkewDiagonal(DomainError):
    pass


class SingularBlock(DomainError):
    pass


class NonHermitian(DomainError):
    pass


class InvalidSymbol(DomainError):
    pass


class PoleOnBoundary(DomainError):
    pass


class IllConditioned(HankelError, ArithmeticError):
    pass


class InconsistentCounts(HankelError, AssertionError):
    """Two routes to the same inertia disagreed; always a bug."""
