"""Exception types shared across the workbench."""


class BiracahError(Exception):
    """Base class for all workbench errors."""


class ZeroDenominator(BiracahError):
    pass


class NotDivisible(BiracahError):
    """Exact polynomial division left a remainder."""


class DegenerateSpectrum(BiracahError):
    """Triangular matrix has a repeated diagonal entry."""


class NotTriangular(BiracahError):
    pass


class Singular(BiracahError):
    pass


class Inconsistent(BiracahError):
    """Overdetermined linear system admits no solution."""


class UnknownGenerator(BiracahError):
    pass


class MixedAlgebras(BiracahError):
    """Operands belong to different algebras."""


class VariableMismatch(BiracahError):
    pass


class NotScalar(BiracahError):
    """Operator expected to be a multiple of the identity is not."""


class NotPolynomialPreserving(BiracahError):
    """Operator applied to a polynomial did not return a polynomial."""


class NotSymmetric(BiracahError):
    """Polynomial is not invariant under the required involution."""


class UnknownSuite(BiracahError):
    pass


class RewriteLimitExceeded(BiracahError):
    """Word rewriting exceeded its step budget (termination guard)."""
