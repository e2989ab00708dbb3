"""Closed-form follower, predecessor and extender set counts for beta-shifts.

Follower sets of length-``n`` words are classified by the longest prefix of
the kneading sequence ``d`` that the word ends with, and two classes ``j``,
``k`` share a follower set exactly when ``sigma^j(d) == sigma^k(d)``.
Predecessor sets are classified by the rank of a word among the length-``n``
factors of ``d``.  Extender set counts combine the two.
"""
from __future__ import annotations

import bisect
from collections import Counter
from dataclasses import dataclass

from .errors import InadmissibleWord, InvalidInput, SoficInput
from .kneading import KneadingSequence, ShiftRelation, _canonical, shift_equal
from .language import as_word, enumerate_language, is_admissible, suffix_class, window_set
from .report import CountReport, Status


def sofic_parameter_p(d: KneadingSequence) -> int:
    """Least ``j >= 1`` such that ``sigma^j(d)`` repeats an earlier shift."""
    if not d.is_exact:
        raise InvalidInput("sofic_parameter_p needs an exact (eventually periodic) sequence")
    j = 1
    while True:
        if any(shift_equal(d, k, j) is ShiftRelation.EQUAL for k in range(j)):
            return j
        j += 1


def _prefix_shift_classes(d: KneadingSequence, n: int) -> tuple[int, bool]:
    """Merge shifts ``0..n`` that a prefix cannot tell apart.

    Returns the number of merged groups (never more than the true number of
    distinct shifts) and whether every pair was proved distinct.
    """
    parent = list(range(n + 1))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    resolved = True
    for j in range(n + 1):
        for k in range(j):
            if shift_equal(d, k, j) is not ShiftRelation.DISTINCT:
                resolved = False
                parent[find(j)] = find(k)
    return len({find(a) for a in range(n + 1)}), resolved


def _prefix_params(d: KneadingSequence) -> dict:
    return {"horizon": d.horizon, "aperiodic_assumed": d.assert_aperiodic}


def follower_count(d: KneadingSequence, n: int) -> CountReport:
    if n < 0:
        raise InvalidInput("length must be nonnegative")
    if d.is_exact:
        p = sofic_parameter_p(d)
        value = min(n + 1, p)
        classes = len({_canonical(*d.tail(j)) for j in range(n + 1)})
        if classes != value:
            raise AssertionError(f"shift classes {classes} disagree with min(n+1, p) = {value}")
        return CountReport(n, value, Status.EXACT, "formula", {"horizon": None, "p": p})
    d.require_horizon(2 * n)
    value, resolved = _prefix_shift_classes(d, n)
    status = Status.EXACT if resolved and d.assert_aperiodic else Status.LOWER_BOUND
    return CountReport(n, value, status, "formula", _prefix_params(d))


def predecessor_count(d: KneadingSequence, n: int) -> CountReport:
    ws = window_set(d, n)
    params = {"horizon": None} if d.is_exact else _prefix_params(d)
    return CountReport(n, len(ws), ws.status, "formula", params)


def predecessor_rank(w, d: KneadingSequence) -> int:
    """How many distinct ``|w|``-factors of ``d`` are lexicographically at least ``w``.

    Words of equal length share a predecessor set exactly when their ranks agree.
    """
    w = as_word(w)
    if not is_admissible(w, d):
        raise InadmissibleWord(f"{w} is not admissible")
    windows = window_set(d, len(w)).windows
    return len(windows) - bisect.bisect_left(windows, w)


@dataclass(frozen=True)
class ClassRankTable:
    """``(suffix class, predecessor rank)`` for every admissible word of length ``n``."""

    n: int
    entries: dict
    counts: Counter

    @classmethod
    def build(cls, d: KneadingSequence, n: int) -> "ClassRankTable":
        windows = window_set(d, n).windows
        entries = {}
        for w in enumerate_language(d, n):
            rank = len(windows) - bisect.bisect_left(windows, w)
            entries[w] = (suffix_class(w, d), rank)
        return cls(n, entries, Counter(entries.values()))


def eta(w, k: int, d: KneadingSequence, table: ClassRankTable = None) -> int:
    """1 when another word of class ``k`` has the same predecessor set as ``w``."""
    w = as_word(w)
    if table is None:
        table = ClassRankTable.build(d, len(w))
    if w not in table.entries:
        raise InadmissibleWord(f"{w} is not admissible")
    own = table.entries[w]
    rank = own[1]
    others = table.counts[(k, rank)] - (1 if own == (k, rank) else 0)
    return 1 if others > 0 else 0


def extender_count_formula(d: KneadingSequence, n: int) -> CountReport:
    """Factor count plus, per factor ``w`` and class ``k``, one for each shared predecessor set.

    Exact for a non-eventually-periodic ``d``.  For exact (sofic) input the
    value is an upper bound.  An unasserted prefix is reported as a lower
    bound, matching how prefix data is treated elsewhere.
    """
    if n < 0:
        raise InvalidInput("length must be nonnegative")
    d.require_horizon(2 * n)
    windows = window_set(d, n).windows
    table = ClassRankTable.build(d, n)
    extra = sum(eta(w, k, d, table) for w in windows for k in range(n + 1))
    value = len(windows) + extra
    if d.is_exact:
        return CountReport(n, value, Status.UPPER_BOUND, "formula", {"horizon": None})
    _, resolved = _prefix_shift_classes(d, n)
    status = Status.EXACT if resolved and d.assert_aperiodic else Status.LOWER_BOUND
    return CountReport(n, value, status, "formula", _prefix_params(d))


def extender_bounds(d: KneadingSequence, n: int) -> tuple[int, int]:
    """``(phi_n, (n+1) * phi_n)`` for a non-sofic kneading sequence."""
    if d.is_exact:
        raise SoficInput("extender bounds hold for non-sofic shifts; exact input is eventually periodic")
    if not d.assert_aperiodic:
        raise SoficInput("prefix input must be asserted aperiodic for extender bounds")
    phi = len(window_set(d, n))
    return phi, (n + 1) * phi
