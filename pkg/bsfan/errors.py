"""
Exception hierarchy for table computations
Each class carries the exit code the command line reports for it
"""

from typing import Optional


class BSFanError(ValueError):
    """Base class for every error raised by the package"""
    exit_code = 1


class ZeroPolynomial(BSFanError):
    pass


class NotIntegerValued(BSFanError):
    pass


class InvalidTable(BSFanError):
    pass


class InvalidArgument(BSFanError):
    pass


class IncompatibleShapes(BSFanError):
    pass


class NotStrictlyIncreasing(BSFanError):
    """A candidate degree sequence fails d_i < d_(i+1)"""

    def __init__(self, message: str, sequence: Optional[tuple] = None):
        super().__init__(message)
        self.sequence = sequence


class GapInColumns(BSFanError):
    pass


class WindowTooNarrow(BSFanError):
    exit_code = 3


class IncompleteTable(BSFanError):
    pass


class NotInCone(BSFanError):
    """Raised by the greedy decompositions; `evidence` names the failing step"""
    exit_code = 2

    def __init__(self, message: str, evidence: Optional[dict] = None):
        super().__init__(message)
        self.evidence = evidence or {}


class MomentsNonzero(BSFanError):
    pass


class RegularityViolation(BSFanError):
    pass


class GapNotTwo(BSFanError):
    pass


class NotAFacet(BSFanError):
    pass


class EmptyColumn(BSFanError):
    pass


class HypothesisViolated(BSFanError):
    pass


class InconsistentTable(BSFanError):
    pass


class CrossCheckMismatch(BSFanError):
    """Two independent constructions of the same object disagree"""
    exit_code = 4
