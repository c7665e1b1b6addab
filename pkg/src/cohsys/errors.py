"""Exception hierarchy.

Every error raised by the package derives from :class:`CohsysError`, so the
command line can map the whole family onto a single exit code.
"""


class CohsysError(Exception):
    """Base class for all package errors."""


# curve oracle
class NonGeneralCurve(CohsysError):
    pass


class InvalidK(CohsysError, ValueError):
    pass


class GenusTooSmall(CohsysError, ValueError):
    pass


class InvalidRank(CohsysError, ValueError):
    pass


class UnsupportedRank(CohsysError, ValueError):
    pass


class InvalidRange(CohsysError, ValueError):
    pass


# slope arithmetic
class NegativeAlpha(CohsysError, ValueError):
    pass


class NonPositiveAlpha(CohsysError, ValueError):
    pass


class NotGenerated(CohsysError, ValueError):
    pass


class NonPositiveDegree(CohsysError, ValueError):
    pass


class NoExcessSections(CohsysError, ValueError):
    pass


class NotProper(CohsysError, ValueError):
    pass


class EmptyCaps(CohsysError, ValueError):
    pass


# profiles and verdicts
class ProfileInvalid(CohsysError, ValueError):
    pass


class ContradictionError(ProfileInvalid):
    """A declared record violates a cap or an exclusion."""


class ParseError(CohsysError, ValueError):
    pass


class SchemaError(ParseError):
    pass


class ForbiddenRow(CohsysError):
    """Small-alpha and linear stability without large-alpha stability."""


class TooFewSections(CohsysError, ValueError):
    pass


class WrongType(CohsysError, ValueError):
    pass


class NetStatusUnknown(CohsysError):
    pass


# constructions
class InfeasibleExtension(CohsysError):
    def __init__(self, message, check=None):
        super().__init__(message)
        self.check = check


class WindowEmpty(CohsysError):
    def __init__(self, message, low=None, high=None):
        super().__init__(message)
        self.low = low
        self.high = high


class VerdictMismatch(CohsysError):
    pass
