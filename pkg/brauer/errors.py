"""
Error types raised by the Brauer graph toolkit.
"""


class BrauerError(Exception):
    """Base class for all toolkit errors"""


class GraphFormatError(BrauerError, ValueError):
    """Graph file could not be read or violates the graph format"""


class NotATree(BrauerError):
    """The underlying graph has a cycle"""


class BadMultiplicityVector(BrauerError, ValueError):
    """Multiplicity vector for a star is not admissible"""


class IndexOutOfFamily(BrauerError, ValueError):
    """Subscripts of a named string violate its defining range"""


class ExceptionalEdgeArgument(BrauerError, ValueError):
    """An edge argument is exceptional where a non-exceptional one is required"""


class GrowthClassUnsupported(BrauerError):
    """Operation is only defined for algebras of non-polynomial growth"""


class WordError(BrauerError, ValueError):
    """A string word failed to parse or validate"""

    def __init__(self, message, position=None):
        super().__init__(message)
        self.position = position


class UnknownArrow(WordError):
    """Letter names no arrow of the presentation"""


class NonComposable(WordError):
    """Consecutive letters do not compose"""


class InverseCancellation(WordError):
    """A letter is followed by its own formal inverse"""


class ZeroSubpath(WordError):
    """A direct or inverse run is zero in the socle quotient"""


class BandModule(BrauerError):
    """Band words are detected and rejected"""


class ProjectiveInput(BrauerError):
    """Operation is undefined on projective modules"""


class BoundExceeded(BrauerError):
    """Iteration bound reached without a conclusive answer"""


class PeriodicSimple(BrauerError):
    """Simple module lies in an exceptional tube"""


class HypothesisFailed(BrauerError):
    """A ladder condition failed"""

    def __init__(self, condition, step=None, detail=""):
        message = f"{condition} failed"
        if step is not None:
            message += f" at l={step}"
        if detail:
            message += f": {detail}"
        super().__init__(message)
        self.condition = condition
        self.step = step
