"""Exception hierarchy.

Every error carries the process exit code the command-line front end uses
when it escapes: 2 for invalid input, 3 for an exceeded horizon or budget,
4 for exhausted precision.
"""


class BetaShiftError(Exception):
    exit_code = 2


class InvalidInput(BetaShiftError, ValueError):
    exit_code = 2


class InvalidBeta(InvalidInput):
    pass


class InvalidKneading(InvalidInput):
    pass


class HorizonTooSmall(InvalidInput):
    pass


class InadmissibleWord(InvalidInput):
    pass


class SoficInput(InvalidInput):
    pass


class ZeroTail(InvalidInput):
    pass


class LimitExceeded(BetaShiftError):
    exit_code = 3


class HorizonExceeded(LimitExceeded):
    pass


class IndexBeyondHorizon(HorizonExceeded):
    pass


class ToleranceUnreachable(LimitExceeded):
    pass


class WorkBudgetExceeded(LimitExceeded):
    pass


class PrecisionExhausted(BetaShiftError):
    exit_code = 4
