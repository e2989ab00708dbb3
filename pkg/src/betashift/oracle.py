"""Brute-force follower, predecessor and extender set counting for any factorial language.

The true sets are infinite; the oracle truncates contexts to length at most
``m`` (the depth).  Words with equal true sets have equal truncations, so a
truncated count never exceeds the true count.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Sequence

from .errors import InvalidInput, WorkBudgetExceeded
from .kneading import KneadingSequence
from .language import as_word, word_str
from .report import CountReport, Status

DEFAULT_WORK_BUDGET = 10 ** 8
KINDS = ("follower", "predecessor", "extender")


@dataclass(frozen=True)
class LegalityPredicate:
    """Membership test for a factor-closed language over ``{0, ..., alphabet_max}``."""

    alphabet_max: int
    test: Callable[[tuple], bool]
    name: str

    def __call__(self, w) -> bool:
        return self.test(tuple(w))


def predicate_from_kneading(d: KneadingSequence) -> LegalityPredicate:
    """Admissibility in the beta-shift of ``d``; prefix data bounds the testable length."""
    cache = [d.head(min(d.horizon or 64, 64))]

    def head(n: int) -> tuple:
        if len(cache[0]) < n:
            cache[0] = d.head(max(n, 2 * len(cache[0])) if d.is_exact else n)
        return cache[0]

    def test(w: tuple) -> bool:
        n = len(w)
        h = head(n)
        return all(w[i:] <= h[:n - i] for i in range(n))

    return LegalityPredicate(d.alphabet_max, test, f"kneading:{d}")


def _full(k: int = 1) -> LegalityPredicate:
    if k < 1:
        raise InvalidInput("full shift needs k >= 1")
    return LegalityPredicate(k, lambda w: all(0 <= a <= k for a in w), f"full({k})")


def _even_shift_test(w: tuple) -> bool:
    last_one = None
    for i, a in enumerate(w):
        if a not in (0, 1):
            return False
        if a == 1:
            if last_one is not None and (i - last_one - 1) % 2 == 1:
                return False
            last_one = i
    return True


def _forbidden(words: Iterable[Sequence[int]], alphabet_max: Optional[int] = None) -> LegalityPredicate:
    forbidden = [as_word(f) for f in words]
    if not forbidden or any(not f for f in forbidden):
        raise InvalidInput("forbidden word list must be nonempty and contain no empty word")
    k = alphabet_max if alphabet_max is not None else max(1, max(max(f) for f in forbidden))

    def test(w: tuple) -> bool:
        if any(a > k for a in w):
            return False
        for f in forbidden:
            ell = len(f)
            for i in range(len(w) - ell + 1):
                if w[i:i + ell] == f:
                    return False
        return True

    return LegalityPredicate(k, test, "forbidden(" + ";".join(word_str(f) for f in forbidden) + ")")


def builtin_predicate(name: str, **params) -> LegalityPredicate:
    """``full`` (param ``k``), ``even_shift``, or ``forbidden_words`` (param ``words``)."""
    if name == "full":
        return _full(**params)
    if name == "even_shift":
        return LegalityPredicate(1, _even_shift_test, "even_shift")
    if name == "forbidden_words":
        return _forbidden(**params)
    raise InvalidInput(f"unknown predicate {name!r}")


@dataclass(frozen=True)
class TruncatedSetCount:
    kind: str
    n: int
    depth: int
    value: int
    stabilized: bool

    def to_report(self) -> CountReport:
        return CountReport(self.n, self.value, Status.LOWER_BOUND, "oracle",
                           {"depth": self.depth, "stabilized": self.stabilized})


class _Tester:
    def __init__(self, pred: LegalityPredicate, budget: int):
        self.pred = pred
        self.budget = budget
        self.calls = 0

    def __call__(self, w: tuple) -> bool:
        self.calls += 1
        if self.calls > self.budget:
            raise WorkBudgetExceeded(f"more than {self.budget} legality tests")
        return self.pred.test(w)


def legal_words(pred: LegalityPredicate, n: int, tester=None) -> list[tuple]:
    """All legal words of length ``n`` in lexicographic order (prefix-pruned)."""
    tester = tester or pred.test
    level = [()]
    for _ in range(n):
        level = [w + (a,) for w in level for a in range(pred.alphabet_max + 1) if tester(w + (a,))]
    return level


def _right_contexts(tester, base: tuple, m: int, k: int) -> list[tuple]:
    out = [()]
    frontier = [()]
    for _ in range(m):
        nxt = []
        for u in frontier:
            for a in range(k + 1):
                v = u + (a,)
                if tester(base + v):
                    nxt.append(v)
        out.extend(nxt)
        frontier = nxt
    return out


def _left_contexts(tester, base: tuple, m: int, k: int) -> list[tuple]:
    out = [()]
    frontier = [()]
    for _ in range(m):
        nxt = []
        for s in frontier:
            for a in range(k + 1):
                v = (a,) + s
                if tester(v + base):
                    nxt.append(v)
        out.extend(nxt)
        frontier = nxt
    return out


def _truncated_set(tester, kind: str, w: tuple, m: int, k: int) -> frozenset:
    if kind == "follower":
        return frozenset(_right_contexts(tester, w, m, k))
    if kind == "predecessor":
        return frozenset(_left_contexts(tester, w, m, k))
    pairs = []
    for s in _left_contexts(tester, w, m, k):
        pairs.extend((s, u) for u in _right_contexts(tester, s + w, m, k))
    return frozenset(pairs)


def _restrict(kind: str, items: frozenset, m: int) -> frozenset:
    if kind == "extender":
        return frozenset(p for p in items if len(p[0]) <= m and len(p[1]) <= m)
    return frozenset(u for u in items if len(u) <= m)


def _depth_values(pred: LegalityPredicate, kind: str, n: int, m: int, work_budget: int) -> list[int]:
    """Distinct-set counts at depths ``0..m`` from one depth-``m`` enumeration."""
    if kind not in KINDS:
        raise InvalidInput(f"kind must be one of {KINDS}")
    if n < 0 or m < 1:
        raise InvalidInput("need n >= 0 and depth m >= 1")
    tester = _Tester(pred, work_budget)
    k = pred.alphabet_max
    sets = [_truncated_set(tester, kind, w, m, k) for w in legal_words(pred, n, tester)]
    values = []
    for depth in range(m + 1):
        cut = sets if depth == m else [_restrict(kind, s, depth) for s in sets]
        values.append(len({tuple(sorted(s)) for s in cut}))
    return values


def truncated_set_count(pred: LegalityPredicate, kind: str, n: int, m: int,
                        work_budget: int = DEFAULT_WORK_BUDGET) -> TruncatedSetCount:
    """Number of distinct depth-``m`` truncated sets among legal words of length ``n``.

    ``stabilized`` reports whether depth ``m - 1`` already gave the same number.
    """
    values = _depth_values(pred, kind, n, m, work_budget)
    return TruncatedSetCount(kind, n, m, values[m], values[m] == values[m - 1])


def stabilized_count(pred: LegalityPredicate, kind: str, n: int, m_max: int,
                     work_budget: int = DEFAULT_WORK_BUDGET) -> TruncatedSetCount:
    """Result at depth ``m_max``, flagged stabilized when depth ``m_max - 1`` agrees.

    Shallower truncations are restrictions of the deepest one, so every depth
    is read off a single enumeration.  Stabilization is a heuristic, not a proof.
    """
    return truncated_set_count(pred, kind, n, m_max, work_budget)


def depth_profile(pred: LegalityPredicate, kind: str, n: int, m_max: int,
                  work_budget: int = DEFAULT_WORK_BUDGET) -> list[int]:
    """Counts at depths ``1..m_max``."""
    return _depth_values(pred, kind, n, m_max, work_budget)[1:]


def truncated_classes(pred: LegalityPredicate, kind: str, n: int, m: int,
                      work_budget: int = DEFAULT_WORK_BUDGET) -> list[list[tuple]]:
    """Legal words of length ``n`` grouped by equal depth-``m`` truncated sets, in word order."""
    if kind not in KINDS:
        raise InvalidInput(f"kind must be one of {KINDS}")
    tester = _Tester(pred, work_budget)
    groups: dict = {}
    for w in legal_words(pred, n, tester):
        key = tuple(sorted(_truncated_set(tester, kind, w, m, pred.alphabet_max)))
        groups.setdefault(key, []).append(w)
    return sorted(groups.values())


def separates(pred: LegalityPredicate, w, v, s=(), u=()) -> bool:
    """Whether the context ``(s, u)`` lies in exactly one of the extender sets of ``w`` and ``v``."""
    s, u = tuple(s), tuple(u)
    return pred.test(s + tuple(w) + u) != pred.test(s + tuple(v) + u)


def random_legal_word(pred: LegalityPredicate, length: int, rng: random.Random) -> tuple:
    """Random legal word grown one symbol at a time; empty tuple if the walk dies."""
    w = ()
    for _ in range(length):
        options = [a for a in range(pred.alphabet_max + 1) if pred.test(w + (a,))]
        if not options:
            return ()
        w = w + (rng.choice(options),)
    return w


def factor_closure_violations(pred: LegalityPredicate, samples: int, max_length: int,
                              rng: random.Random) -> list[tuple]:
    """Sampled legal words that have an illegal factor (empty when factor-closed)."""
    bad = []
    k = pred.alphabet_max
    for _ in range(samples):
        length = rng.randint(1, max_length)
        w = tuple(rng.randint(0, k) for _ in range(length))
        if not pred.test(w):
            w = random_legal_word(pred, length, rng)
        if not w:
            continue
        if any(not pred.test(w[i:j]) for i in range(len(w)) for j in range(i + 1, len(w) + 1)):
            bad.append(w)
    return bad
