"""Builders for example kneading sequences and complexity-realizing constructions."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Sequence

from .errors import InvalidInput, InvalidKneading, ZeroTail
from .kneading import KneadingSequence, NumericInterval, kneading_from_beta, validate_kneading


def lift_digits(digits: Sequence[int]) -> list[int]:
    """Add one to every digit; the factor complexity is unchanged."""
    return [a + 1 for a in digits]


def prepend_symbol(digits: Sequence[int], assert_aperiodic: bool = False) -> KneadingSequence:
    """Put a new largest symbol in front of ``digits``.

    The result dominates all its shifts, so it is a kneading sequence, and it
    has exactly one more factor of each length than ``digits``.
    """
    digits = list(digits)
    if not digits or not any(digits):
        raise ZeroTail("input is all zeros; lift the digits first")
    top = max(digits) + 1
    d = KneadingSequence.prefix([top] + digits, assert_aperiodic=assert_aperiodic)
    report = validate_kneading(d)
    if not report.valid:
        raise InvalidKneading(f"prepended sequence failed validation: {report.violations}")
    return d


def champernowne(max_block: int) -> list[int]:
    """All binary words of length 1..max_block, by length then lexicographically."""
    if max_block < 1:
        raise InvalidInput("max_block must be positive")
    out: list[int] = []
    for length in range(1, max_block + 1):
        for word in product((0, 1), repeat=length):
            out.extend(word)
    return out


@dataclass(frozen=True)
class SequenceRecipe:
    name: str
    parameters: dict = field(default_factory=dict)
    output: KneadingSequence = None

    def to_json(self) -> dict:
        return {"name": self.name, "parameters": dict(sorted(self.parameters.items())),
                "kneading": self.output.to_json()}


def _golden_mean() -> KneadingSequence:
    return KneadingSequence.exact((), (1, 0))


def _full_shift(k: int = 1) -> KneadingSequence:
    if k < 1:
        raise InvalidInput("full shift needs k >= 1")
    return KneadingSequence.exact((), (k,))


def _shifted_golden() -> KneadingSequence:
    return KneadingSequence.exact((2,), (1, 0))


def _beta_1_8_prefix(L: int = 40) -> KneadingSequence:
    d = kneading_from_beta(NumericInterval(Fraction(9, 5), Fraction(9, 5)), L)
    # 9/5 is not an algebraic integer, so its expansion of 1 is not eventually periodic
    return KneadingSequence.prefix(d.digits, assert_aperiodic=True)


def _champernowne_tilde(max_block: int = 5) -> KneadingSequence:
    return prepend_symbol(champernowne(max_block), assert_aperiodic=True)


RECIPES = {
    "golden_mean": _golden_mean,
    "full_shift": _full_shift,
    "shifted_golden": _shifted_golden,
    "beta_1_8_prefix": _beta_1_8_prefix,
    "champernowne_tilde": _champernowne_tilde,
}


def named_example(name: str, **params) -> SequenceRecipe:
    """Build a named battery sequence, e.g. ``named_example("full_shift", k=2)``."""
    try:
        builder = RECIPES[name]
    except KeyError:
        raise InvalidInput(f"unknown recipe {name!r}; known: {', '.join(sorted(RECIPES))}") from None
    try:
        out = builder(**params)
    except TypeError as exc:
        raise InvalidInput(f"bad parameters for {name}: {exc}") from exc
    return SequenceRecipe(name, dict(params), out)


def battery() -> dict:
    """The standard test battery, keyed by a short label."""
    return {
        "golden_mean": _golden_mean(),
        "full_shift_1": _full_shift(1),
        "full_shift_2": _full_shift(2),
        "shifted_golden": _shifted_golden(),
        "beta_1_8": _beta_1_8_prefix(40),
        "champernowne_tilde": _champernowne_tilde(5),
    }
