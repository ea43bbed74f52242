"""Exception hierarchy shared by all modules."""


class ConeSpectraError(Exception):
    """Base class for every error raised by this package."""


# degree sequences

class DegreeSequenceError(ConeSpectraError, ValueError):
    pass


class NotNonIncreasing(DegreeSequenceError):
    pass


class RangeError(DegreeSequenceError):
    pass


class NotConeSequence(DegreeSequenceError):
    pass


class WrongEdgeCount(DegreeSequenceError):
    pass


class NoCaseMatch(DegreeSequenceError):
    pass


class NotGraphical(NoCaseMatch):
    """Fits the arithmetic of some case but has no simple realization."""


class LengthMismatch(DegreeSequenceError):
    pass


class GapTooSmall(DegreeSequenceError):
    pass


class OrderViolation(DegreeSequenceError):
    pass


class NotMajorized(DegreeSequenceError):
    pass


class NoValidChain(DegreeSequenceError):
    pass


# graphs

class GraphError(ConeSpectraError, ValueError):
    pass


class Disconnected(GraphError):
    pass


class IsTree(GraphError):
    pass


class InvalidShiftSet(GraphError):
    pass


class PreconditionViolated(GraphError):
    pass


class FormatError(GraphError):
    pass


# spectral

class NoConvergence(ConeSpectraError, RuntimeError):
    """Iteration cap hit; ``best`` holds the last estimate."""

    def __init__(self, message, best=None):
        super().__init__(message)
        self.best = best


class NotUnit(ConeSpectraError, ValueError):
    pass


# constructions

class ConstructionError(ConeSpectraError, ValueError):
    pass


class NotTreeSequence(ConstructionError):
    pass


class NotUnicyclicSequence(ConstructionError):
    pass


class NotBicyclicSequence(ConstructionError):
    pass


class ParamRange(ConstructionError):
    pass


class UnsupportedCyclomatic(ConstructionError):
    pass


# enumeration

class TooLarge(ConeSpectraError, ValueError):
    pass


class EmptyFamily(ConeSpectraError, ValueError):
    pass


class HypothesisNotMet(ConeSpectraError, ValueError):
    pass
