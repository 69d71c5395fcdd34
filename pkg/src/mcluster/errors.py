"""Exception hierarchy shared by all modules."""


class MclusterError(Exception):
    """Base class for every error raised by this package."""


class InvalidChord(MclusterError, ValueError):
    pass


class BadAnchor(MclusterError, ValueError):
    pass


class UnknownVertex(MclusterError, KeyError):
    pass


class DegenerateQuotient(MclusterError, ValueError):
    pass


class InvariantViolation(MclusterError, AssertionError):
    """A structural invariant of a constructed object does not hold."""


class UnclassifiedComponent(MclusterError):
    pass


class PredictionGap(MclusterError):
    """A closed-form prediction is not defined for the given parameters."""


class TheoremViolation(MclusterError, AssertionError):
    """A computed value contradicts a stated structural result."""


class VerificationFailure(MclusterError, AssertionError):
    def __init__(self, message, diff=None):
        super().__init__(message)
        self.diff = diff or {}


class ModelInconsistency(MclusterError, AssertionError):
    pass


class BoundTooSmall(MclusterError):
    pass


class NoCanonicalTriangle(MclusterError, ValueError):
    pass


class NotInPower(MclusterError, ValueError):
    pass
