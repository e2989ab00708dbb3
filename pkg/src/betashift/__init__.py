"""Kneading sequences, admissibility, and follower/predecessor/extender set counts of beta-shifts."""
from .errors import (
    BetaShiftError,
    HorizonExceeded,
    HorizonTooSmall,
    InadmissibleWord,
    IndexBeyondHorizon,
    InvalidBeta,
    InvalidInput,
    InvalidKneading,
    PrecisionExhausted,
    SoficInput,
    ToleranceUnreachable,
    WorkBudgetExceeded,
    ZeroTail,
)
from .kneading import (
    FromKneading,
    KneadingSequence,
    NumericInterval,
    PolynomialRoot,
    ShiftRelation,
    ValidationReport,
    greedy_expansion,
    kneading_from_beta,
    normalize,
    shift_equal,
    solve_beta,
    validate_kneading,
)
from .language import enumerate_language, is_admissible, subword_complexity, suffix_class, window_set
from .report import CountReport, Status
from .theorems import (
    eta,
    extender_bounds,
    extender_count_formula,
    follower_count,
    predecessor_count,
    predecessor_rank,
    sofic_parameter_p,
)
from .constructions import battery, champernowne, lift_digits, named_example, prepend_symbol
from .oracle import builtin_predicate, predicate_from_kneading, stabilized_count, truncated_set_count

__version__ = "0.1.0"
