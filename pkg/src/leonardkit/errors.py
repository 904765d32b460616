"""Exception types raised across the toolkit."""


class LeonardKitError(Exception):
    """Base class for all errors raised by this package."""


class DescriptorMismatch(LeonardKitError):
    """Operands belong to different fields."""


class DimMismatch(LeonardKitError):
    """Operands have incompatible dimensions."""


class Singular(LeonardKitError):
    """Matrix inversion was requested for a singular matrix."""


class ModulusTooLarge(LeonardKitError):
    """Exhaustive root search over GF(p) refused beyond the configured bound."""


class NotMultiplicityFree(LeonardKitError):
    """Matrix does not have dim distinct eigenvalues in its field."""


class BadOrdering(LeonardKitError):
    """Supplied eigenvalue ordering is not a permutation of the spectrum."""


class IndexOutOfRange(LeonardKitError, IndexError):
    """Index outside 0..d."""


class PatternViolation(LeonardKitError):
    """Vanishing pattern required for this operation does not hold."""


class SplitDoesNotExist(LeonardKitError):
    """No split decomposition exists for the requested orderings."""


class NotIrreducibleTridiagonal(LeonardKitError):
    """Matrix is not irreducible tridiagonal in the requested eigenbasis."""


class NotLeonard(LeonardKitError):
    """Pair of matrices is not a Leonard pair for the given orderings."""


class InvariantViolation(LeonardKitError):
    """Input data violates a structural invariant (duplicate eigenvalues, zero split scalar, ...)."""


class SamplingExhausted(LeonardKitError):
    """Rejection sampling exceeded its retry budget."""


class DocumentError(LeonardKitError):
    """Input document is malformed or violates the instance schema."""
