"""Admissible words of a beta-shift and the factor structure of its kneading sequence.

A finite word ``w`` is admissible when every suffix of ``w`` is
lexicographically at most the equally long prefix of the kneading sequence.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InvalidInput
from .kneading import KneadingSequence
from .report import CountReport, Status

Word = tuple


def as_word(digits: Iterable[int]) -> Word:
    w = tuple(digits)
    for a in w:
        if isinstance(a, bool) or not isinstance(a, int) or a < 0:
            raise InvalidInput(f"word digits must be nonnegative integers, got {a!r}")
    return w


def parse_word(text: str) -> Word:
    """Parse ``"0,1,0"`` or ``"010"`` (single-digit alphabets only for the latter)."""
    text = text.strip()
    if not text:
        return ()
    try:
        if "," in text:
            return as_word(int(t) for t in text.split(","))
        return as_word(int(c) for c in text)
    except ValueError as exc:
        raise InvalidInput(f"cannot parse word {text!r}") from exc


def word_str(w: Sequence[int]) -> str:
    if all(a < 10 for a in w):
        return "".join(map(str, w))
    return ",".join(map(str, w))


def is_admissible(w: Sequence[int], d: KneadingSequence) -> bool:
    w = as_word(w)
    n = len(w)
    head = d.head(n)
    return all(w[i:] <= head[:n - i] for i in range(n))


def enumerate_language(d: KneadingSequence, n: int) -> list[Word]:
    """All admissible words of length ``n`` in ascending lexicographic order.

    Words are grown left to right while tracking which prefixes of the
    kneading sequence are currently matched as suffixes; a digit that beats
    the next digit of any matched prefix kills the branch, so rejected
    prefixes are never extended.
    """
    if n < 0:
        raise InvalidInput("length must be nonnegative")
    head = d.head(n)
    k = d.alphabet_max
    level: list[tuple[Word, tuple]] = [((), ())]
    for _ in range(n):
        nxt = []
        for w, tight in level:
            for c in range(k + 1):
                new_tight = []
                ok = True
                for length in tight + (0,):
                    bound = head[length]
                    if c > bound:
                        ok = False
                        break
                    if c == bound:
                        new_tight.append(length + 1)
                if not ok:
                    # larger digits fail too
                    break
                nxt.append((w + (c,), tuple(new_tight)))
        level = nxt
    return [w for w, _ in level]


@dataclass(frozen=True)
class WindowSet:
    """Distinct length-``n`` factors of a kneading sequence, sorted."""

    n: int
    windows: tuple
    status: Status

    def __len__(self) -> int:
        return len(self.windows)

    def __contains__(self, w) -> bool:
        return tuple(w) in set(self.windows)


def window_set(d: KneadingSequence, n: int) -> WindowSet:
    if n < 0:
        raise InvalidInput("length must be nonnegative")
    if d.is_exact:
        starts = len(d.preperiod) + len(d.period)
        seq = d.head(starts + n)
        status = Status.EXACT
    else:
        d.require_horizon(n)
        seq = d.digits
        starts = len(seq) - n + 1
        status = Status.LOWER_BOUND
    found = {seq[i:i + n] for i in range(starts)}
    return WindowSet(n, tuple(sorted(found)), status)


def subword_complexity(d: KneadingSequence, n: int) -> CountReport:
    """Number of distinct length-``n`` factors; only a lower bound for a prefix."""
    ws = window_set(d, n)
    return CountReport(n, len(ws), ws.status, "formula", {"horizon": d.horizon})


def failure_function(pattern: Sequence[int]) -> list[int]:
    """Border array: ``fail[i]`` is the longest proper border of ``pattern[:i+1]``."""
    fail = [0] * len(pattern)
    b = 0
    for i in range(1, len(pattern)):
        while b and pattern[i] != pattern[b]:
            b = fail[b - 1]
        if pattern[i] == pattern[b]:
            b += 1
        fail[i] = b
    return fail


def suffix_class(w: Sequence[int], d: KneadingSequence) -> int:
    """Length of the longest prefix of ``d`` that is a suffix of ``w``."""
    w = as_word(w)
    pattern = d.head(len(w))
    fail = failure_function(pattern)
    state = 0
    for c in w:
        while state and (state == len(pattern) or pattern[state] != c):
            state = fail[state - 1]
        if state < len(pattern) and pattern[state] == c:
            state += 1
    return state
