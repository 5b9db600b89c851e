"""Exception hierarchy shared by every module of the package."""


class NodalPQError(Exception):
    """Base class; the CLI maps any subclass to exit code 3."""


# exact algebra
class NotMonic(NodalPQError):
    pass


class NotSquarefree(NodalPQError):
    pass


class ZeroDivisor(NodalPQError):
    """Inversion failed because the modulus is reducible.

    ``factor`` is the nontrivial common factor of the element and the modulus.
    """

    def __init__(self, message, factor=None):
        super().__init__(message)
        self.factor = factor


class FieldMismatch(NodalPQError):
    pass


class DimensionMismatch(NodalPQError):
    pass


# semigroups
class InvalidContext(NodalPQError):
    pass


class NotDownClosed(NodalPQError):
    pass


class NotClosed(NodalPQError):
    """A lattice set does not correspond to a numerical semigroup."""

    def __init__(self, message, violation=None):
        super().__init__(message)
        self.violation = violation


class NotASemigroup(NodalPQError):
    pass


class BoundViolation(NodalPQError):
    pass


class WrongContext(NodalPQError):
    pass


class GenusTooSmall(NodalPQError):
    pass


class PTooSmall(NodalPQError):
    pass


# curves
class NotWeierstrass(NodalPQError):
    pass


class NotSingularAtClaim(NodalPQError):
    def __init__(self, message, point=None):
        super().__init__(message)
        self.point = point


class NotANode(NodalPQError):
    def __init__(self, message, point=None):
        super().__init__(message)
        self.point = point


class ExtraSingularities(NodalPQError):
    pass


class NonIsolatedSingularLocus(NodalPQError):
    pass


class SearchExhausted(NodalPQError):
    pass


class BadShape(NodalPQError):
    pass


class FiltrationTooBig(NodalPQError):
    pass


class KeepNotSubset(NodalPQError):
    pass


class Infeasible(NodalPQError):
    pass


class ContextMismatch(NodalPQError):
    pass


# weierstrass
class Uncertified(NodalPQError):
    pass


class GapCountMismatch(NodalPQError):
    pass


class NotRealizable(NodalPQError):
    pass


class AdjointNotSingular(NodalPQError):
    """The eliminating polynomial does not vanish doubly at a node to be kept."""
