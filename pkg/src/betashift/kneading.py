"""Kneading sequences of beta-shifts and the certified arithmetic connecting them to beta.

A kneading sequence (the limit of greedy expansions of ``x`` as ``x`` rises
to 1) is stored either exactly, as ``preperiod + period^inf``, or as a finite
prefix with an explicit horizon.  Beta itself is given as a rational
interval, as the root of an integer polynomial, or implicitly through its
kneading sequence.  All arithmetic is exact rational arithmetic; greedy
digits are only emitted once an enclosure of ``beta * r`` provably sits
inside a single unit interval.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, Union

from . import poly
from .errors import (
    HorizonExceeded,
    HorizonTooSmall,
    IndexBeyondHorizon,
    InvalidBeta,
    InvalidInput,
    InvalidKneading,
    PrecisionExhausted,
    ToleranceUnreachable,
)

DEFAULT_PRECISION_BITS = 4096
_START_BITS = 64

Digits = tuple


class Mode(str, enum.Enum):
    EXACT = "exact"
    PREFIX = "prefix"


class ShiftRelation(str, enum.Enum):
    EQUAL = "equal"
    DISTINCT = "distinct"
    UNKNOWN = "unknown"


def _digits(values: Sequence[int], what: str) -> Digits:
    out = []
    for v in values:
        if isinstance(v, bool) or not isinstance(v, int):
            raise InvalidInput(f"{what}: digits must be integers, got {v!r}")
        if v < 0:
            raise InvalidInput(f"{what}: negative digit {v}")
        out.append(v)
    return tuple(out)


@dataclass(frozen=True)
class KneadingSequence:
    """A candidate kneading sequence over ``{0, ..., alphabet_max}``.

    Construct with :meth:`exact` or :meth:`prefix`.  Construction only checks
    structure; use :func:`validate_kneading` for the lexicographic
    conditions.  ``alphabet_max`` is the largest digit present (at least 1).
    """

    mode: Mode
    preperiod: Digits = ()
    period: Digits = ()
    digits: Digits = ()
    assert_aperiodic: bool = False
    alphabet_max: int = field(init=False)

    def __post_init__(self):
        if self.mode is Mode.EXACT:
            if not self.period:
                raise InvalidInput("exact kneading sequence needs a nonempty period")
            if self.digits or self.assert_aperiodic:
                raise InvalidInput("exact kneading sequence takes no prefix fields")
            present = self.preperiod + self.period
        else:
            if not self.digits:
                raise InvalidInput("prefix kneading sequence needs at least one digit")
            if self.preperiod or self.period:
                raise InvalidInput("prefix kneading sequence takes no periodic fields")
            present = self.digits
        object.__setattr__(self, "alphabet_max", max(1, max(present)))

    @classmethod
    def exact(cls, preperiod: Sequence[int] = (), period: Sequence[int] = (1,)) -> "KneadingSequence":
        return cls(Mode.EXACT, preperiod=_digits(preperiod, "preperiod"), period=_digits(period, "period"))

    @classmethod
    def prefix(cls, digits: Sequence[int], assert_aperiodic: bool = False) -> "KneadingSequence":
        return cls(Mode.PREFIX, digits=_digits(digits, "digits"), assert_aperiodic=bool(assert_aperiodic))

    @property
    def is_exact(self) -> bool:
        return self.mode is Mode.EXACT

    @property
    def horizon(self) -> Optional[int]:
        """Number of known digits; ``None`` for an exact sequence."""
        return None if self.is_exact else len(self.digits)

    def digit(self, i: int) -> int:
        if self.is_exact:
            m = len(self.preperiod)
            return self.preperiod[i] if i < m else self.period[(i - m) % len(self.period)]
        if i >= len(self.digits):
            raise HorizonExceeded(f"digit {i} lies beyond horizon {len(self.digits)}")
        return self.digits[i]

    def window(self, start: int, length: int) -> Digits:
        """Digits ``start .. start+length-1``."""
        if not self.is_exact:
            if start + length > len(self.digits):
                raise HorizonExceeded(
                    f"window [{start}, {start + length}) exceeds horizon {len(self.digits)}"
                )
            return self.digits[start:start + length]
        return tuple(self.digit(i) for i in range(start, start + length))

    def head(self, n: int) -> Digits:
        return self.window(0, n)

    def require_horizon(self, n: int) -> None:
        if not self.is_exact and len(self.digits) < n:
            raise HorizonExceeded(f"need {n} digits, horizon is {len(self.digits)}")

    def tail(self, j: int) -> tuple[Digits, Digits]:
        """``(preperiod, period)`` of the shifted exact sequence."""
        if not self.is_exact:
            raise InvalidInput("tail() needs an exact sequence")
        m, q = len(self.preperiod), len(self.period)
        if j < m:
            return self.preperiod[j:], self.period
        r = (j - m) % q
        return (), self.period[r:] + self.period[:r]

    def to_json(self) -> dict:
        if self.is_exact:
            return {"type": "exact", "preperiod": list(self.preperiod), "period": list(self.period)}
        return {"type": "prefix", "digits": list(self.digits), "assert_aperiodic": self.assert_aperiodic}

    @classmethod
    def from_json(cls, obj: dict) -> "KneadingSequence":
        try:
            kind = obj["type"]
            if kind == "exact":
                return cls.exact(obj.get("preperiod", []), obj["period"])
            if kind == "prefix":
                return cls.prefix(obj["digits"], obj.get("assert_aperiodic", False))
        except (KeyError, TypeError) as exc:
            raise InvalidInput(f"malformed kneading sequence JSON: {exc}") from exc
        raise InvalidInput(f"unknown kneading sequence type {kind!r}")

    def __str__(self) -> str:
        if self.is_exact:
            pre = "".join(map(str, self.preperiod))
            return f"{pre}({''.join(map(str, self.period))})^inf"
        return "".join(map(str, self.digits)) + "..."


# --------------------------------------------------------------------------
# beta specifications


@dataclass(frozen=True)
class NumericInterval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if not 1 < self.lo <= self.hi:
            raise InvalidBeta(f"need 1 < lo <= hi, got [{self.lo}, {self.hi}]")


@dataclass(frozen=True)
class PolynomialRoot:
    """Root of ``sum(coeffs[i] * x**i)`` isolated in ``[lo, hi]``."""

    coeffs: tuple
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if not 1 < self.lo <= self.hi:
            raise InvalidBeta(f"need 1 < lo <= hi, got [{self.lo}, {self.hi}]")
        try:
            poly.RealRoot(poly.make(self.coeffs), self.lo, self.hi)
        except ValueError as exc:
            raise InvalidBeta(f"polynomial root not isolated: {exc}") from exc


@dataclass(frozen=True)
class FromKneading:
    kneading: KneadingSequence


BetaSpec = Union[NumericInterval, PolynomialRoot, FromKneading]


def beta_from_json(obj: dict) -> BetaSpec:
    try:
        kind = obj["type"]
        if kind == "interval":
            return NumericInterval(Fraction(str(obj["lo"])), Fraction(str(obj["hi"])))
        if kind == "polynomial":
            return PolynomialRoot(tuple(obj["coeffs"]), Fraction(str(obj["lo"])), Fraction(str(obj["hi"])))
        if kind in ("exact", "prefix"):
            return FromKneading(KneadingSequence.from_json(obj))
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        if isinstance(exc, InvalidInput):
            raise
        raise InvalidBeta(f"malformed beta JSON: {exc}") from exc
    raise InvalidBeta(f"unknown beta type {kind!r}")


def beta_to_json(beta: BetaSpec) -> dict:
    if isinstance(beta, NumericInterval):
        return {"type": "interval", "lo": _fraction_str(beta.lo), "hi": _fraction_str(beta.hi)}
    if isinstance(beta, PolynomialRoot):
        return {"type": "polynomial", "coeffs": list(beta.coeffs),
                "lo": _fraction_str(beta.lo), "hi": _fraction_str(beta.hi)}
    return beta.kneading.to_json()


def _fraction_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else str(x)


class _Arithmetic:
    """Enclosures of beta plus, when beta is algebraic, exact zero tests.

    ``root`` is set for algebraic beta (rational points included); remainders
    are then reduced modulo its polynomial.  A bare interval only offers
    its fixed enclosure.
    """

    def __init__(self, root: Optional[poly.RealRoot] = None, fixed=None):
        self.root = root
        self.fixed = fixed

    @property
    def exact(self) -> bool:
        return self.root is not None

    @property
    def refinable(self) -> bool:
        return self.root is not None and not self.root.is_exact

    def enclosure(self, bits: int) -> tuple[Fraction, Fraction]:
        if self.root is not None:
            return self.root.enclosure(bits)
        return self.fixed

    def reduce(self, q):
        return poly.mod(q, self.root.poly) if self.root is not None else q

    def is_zero(self, q) -> bool:
        return self.root.vanishes_on(q)


def _arithmetic_for(beta: BetaSpec) -> _Arithmetic:
    if isinstance(beta, NumericInterval):
        if beta.lo == beta.hi:
            return _Arithmetic(poly.RealRoot(poly.make([-beta.lo, 1]), beta.lo, beta.lo))
        return _Arithmetic(fixed=(beta.lo, beta.hi))
    if isinstance(beta, PolynomialRoot):
        return _Arithmetic(poly.RealRoot(poly.make(beta.coeffs), beta.lo, beta.hi))
    if isinstance(beta, FromKneading):
        d = beta.kneading
        _require_valid(d)
        k = d.alphabet_max
        if d.is_exact:
            return _Arithmetic(poly.RealRoot(kneading_polynomial(d), Fraction(k), Fraction(k + 1)))
        lo, hi = _prefix_enclosure(d, Fraction(1, 2 ** 200))
        return _Arithmetic(fixed=(lo, hi))
    raise InvalidBeta(f"not a beta specification: {beta!r}")


def _certified_digit(q, arith: _Arithmetic, max_bits: int) -> int:
    """``floor(q(beta))`` for ``0 <= q(beta)``, refining until certified."""
    bits = _START_BITS
    while True:
        lo, hi = arith.enclosure(bits)
        a, b = poly.interval_eval(q, lo, hi)
        a = max(a, Fraction(0))
        m = math.floor(a)
        if b < m + 1:
            return m
        if arith.exact and math.floor(b) == m + 1 and arith.is_zero(poly.sub(q, (Fraction(m + 1),))):
            return m + 1
        if not arith.refinable or bits >= max_bits:
            raise PrecisionExhausted(
                f"floor of an enclosure [{float(a):.6g}, {float(b):.6g}] is ambiguous at {bits} bits"
            )
        bits = min(2 * bits, max_bits)


def _remainder_is_zero(r, arith: _Arithmetic) -> bool:
    if not r:
        return True
    if not arith.exact:
        return False
    lo, hi = arith.enclosure(_START_BITS)
    a, b = poly.interval_eval(r, lo, hi)
    if a > 0 or b < 0:
        return False
    return arith.is_zero(r)


def _greedy(beta: BetaSpec, count: int, precision_bits: int) -> tuple[list[int], Optional[int]]:
    """First ``count`` greedy digits of 1 and the position where the remainder hit zero."""
    arith = _arithmetic_for(beta)
    digits: list[int] = []
    r = poly.make([1])
    while len(digits) < count:
        q = arith.reduce(poly.shift_up(r))
        dig = _certified_digit(q, arith, precision_bits)
        digits.append(dig)
        r = arith.reduce(poly.sub(q, (Fraction(dig),)))
        if _remainder_is_zero(r, arith):
            terminated = len(digits)
            digits.extend([0] * (count - len(digits)))
            return digits, terminated
    return digits, None


def greedy_expansion(beta: BetaSpec, count: int, precision_bits: int = DEFAULT_PRECISION_BITS) -> list[int]:
    """First ``count`` digits of the greedy beta-expansion of 1.

    Raises :class:`PrecisionExhausted` when a digit cannot be certified
    within ``precision_bits`` bits of refinement (or at all, for a bare
    interval that straddles a digit boundary).
    """
    if count < 1:
        raise InvalidInput("count must be positive")
    return _greedy(beta, count, precision_bits)[0]


def kneading_from_beta(beta: BetaSpec, horizon: int,
                       precision_bits: int = DEFAULT_PRECISION_BITS) -> KneadingSequence:
    """The kneading sequence of ``beta``, exact when the expansion of 1 terminates.

    A terminating expansion ``d_1 ... d_m 0^inf`` becomes the purely periodic
    ``(d_1 ... d_{m-1} (d_m - 1))^inf``; anything else is returned as a
    prefix of ``horizon`` certified digits.
    """
    if horizon < 2:
        raise HorizonTooSmall(f"horizon must be at least 2, got {horizon}")
    digits, terminated = _greedy(beta, horizon, precision_bits)
    if terminated is None:
        return KneadingSequence.prefix(digits)
    period = digits[:terminated - 1] + [digits[terminated - 1] - 1]
    d = normalize(KneadingSequence.exact((), period))
    report = validate_kneading(d)
    if not report.valid:
        raise AssertionError(f"finite-expansion rule produced an invalid sequence: {report.violations}")
    lo, hi = _arithmetic_for(beta).enclosure(_START_BITS)
    if not kneading_series(d, hi) <= 1 <= kneading_series(d, lo):
        raise AssertionError("finite-expansion rule produced a sequence whose series misses 1")
    return d


# --------------------------------------------------------------------------
# solving for beta


def kneading_series(d: KneadingSequence, x: Fraction) -> Fraction:
    """``sum(d_i / x**(i+1))`` in closed form for an exact ``d`` (``x > 1``)."""
    x = Fraction(x)
    inv = 1 / x
    total = Fraction(0)
    p = inv
    for a in d.preperiod:
        total += a * p
        p *= inv
    block = Fraction(0)
    pb = Fraction(1)
    for b in d.period:
        pb *= inv
        block += b * pb
    # p == x**-(m+1); the periodic part is x**-m * block / (1 - x**-q)
    return total + p * x * block / (1 - pb)


def kneading_polynomial(d: KneadingSequence):
    """Integer polynomial whose unique root above 1 solves the kneading series equation."""
    m, q = len(d.preperiod), len(d.period)
    lhs = poly.sub(poly.shift_up((Fraction(1),), m + q), poly.shift_up((Fraction(1),), m))
    a_part = poly.make([d.preperiod[m - 1 - e] if e < m else 0 for e in range(m)])
    b_part = poly.make([d.period[q - 1 - e] for e in range(q)])
    xq_minus_1 = poly.sub(poly.shift_up((Fraction(1),), q), (Fraction(1),))
    return poly.sub(poly.sub(lhs, poly.mul(xq_minus_1, a_part)), b_part)


def _bisect_decreasing(g, lo: Fraction, hi: Fraction, width: Fraction) -> tuple[Fraction, Fraction]:
    """Bracket the root of a decreasing ``g`` with ``g(lo) > 0 >= g(hi)``."""
    if g(hi) == 0:
        return hi, hi
    while hi - lo > width:
        mid = (lo + hi) / 2
        v = g(mid)
        if v == 0:
            return mid, mid
        if v > 0:
            lo = mid
        else:
            hi = mid
    return lo, hi


def _prefix_parts(d: KneadingSequence):
    k = d.alphabet_max
    L = len(d.digits)

    def partial(x: Fraction) -> Fraction:
        inv = 1 / x
        acc = Fraction(0)
        for a in reversed(d.digits):
            acc = (acc + a) * inv
        return acc

    def tail(x: Fraction) -> Fraction:
        return k / (x ** L * (x - 1))

    return partial, tail


def _prefix_enclosure(d: KneadingSequence, width: Fraction) -> tuple[Fraction, Fraction]:
    k = Fraction(d.alphabet_max)
    partial, tail = _prefix_parts(d)
    lo1, _ = _bisect_decreasing(lambda x: partial(x) - 1, k, k + 1, width)

    def upper(x: Fraction) -> Fraction:
        if x == 1:
            return Fraction(1)
        return partial(x) + tail(x) - 1

    _, hi2 = _bisect_decreasing(upper, k, k + 1, width)
    return lo1, hi2


def solve_beta(d: KneadingSequence, tolerance) -> tuple[Fraction, Fraction]:
    """Interval of width at most ``tolerance`` containing the beta whose kneading sequence is ``d``.

    Exact sequences give a point interval whenever beta is hit exactly by
    bisection (integers, for example).  For a prefix the interval also
    covers every continuation of the known digits.
    """
    _require_valid(d)
    tol = Fraction(str(tolerance)) if isinstance(tolerance, float) else Fraction(tolerance)
    if tol <= 0:
        raise InvalidInput("tolerance must be positive")
    k = Fraction(d.alphabet_max)
    if d.is_exact:
        return _bisect_decreasing(lambda x: kneading_series(d, x) - 1, k, k + 1, tol)
    width = tol / 4
    while True:
        lo, hi = _prefix_enclosure(d, width)
        if hi - lo <= tol:
            return lo, hi
        inner_lo = lo + width
        inner_hi = hi - width
        if inner_hi - inner_lo > tol:
            raise ToleranceUnreachable(
                f"horizon {d.horizon} only pins beta to width about {float(inner_hi - inner_lo):.3g}"
            )
        width /= 4


# --------------------------------------------------------------------------
# validation and canonical forms


@dataclass(frozen=True)
class ValidationReport:
    valid: bool
    violations: tuple
    checked_horizon: int

    def to_json(self) -> dict:
        return {
            "valid": self.valid,
            "violations": [{"shift": i, "description": msg} for i, msg in self.violations],
            "checked_horizon": self.checked_horizon,
        }


def validate_kneading(d: KneadingSequence) -> ValidationReport:
    """Check that ``d`` dominates its shifts, starts with its largest digit and has no zero tail."""
    violations = []
    if d.is_exact:
        m, q = len(d.preperiod), len(d.period)
        span = m + 2 * q
        if not any(d.period):
            violations.append((m, "period is all zeros (zero tail)"))
        seq = d.head(2 * span)
        ref = seq[:span]
        shifts = range(1, m + q)
    else:
        span = len(d.digits)
        seq = ref = d.digits
        if span < 2:
            violations.append((0, "prefix horizon must be at least 2"))
        shifts = range(1, span)
    if seq[0] != d.alphabet_max:
        violations.append((0, f"first digit {seq[0]} is not the largest digit {d.alphabet_max}"))
    for i in shifts:
        if d.is_exact:
            shifted, against = seq[i:i + span], ref
        else:
            shifted, against = seq[i:], ref[:span - i]
        if shifted > against:
            violations.append((i, "shifted sequence exceeds the sequence lexicographically"))
    return ValidationReport(not violations, tuple(violations), span)


def _require_valid(d: KneadingSequence) -> None:
    report = validate_kneading(d)
    if not report.valid:
        raise InvalidKneading("; ".join(f"shift {i}: {msg}" for i, msg in report.violations))


def _minimal_period(period: Digits) -> Digits:
    q = len(period)
    for t in range(1, q + 1):
        if q % t == 0 and period[:t] * (q // t) == period:
            return period[:t]
    return period


def _canonical(pre: Digits, period: Digits) -> tuple[Digits, Digits]:
    period = _minimal_period(period)
    while pre and pre[-1] == period[-1]:
        pre = pre[:-1]
        period = period[-1:] + period[:-1]
    return pre, period


def normalize(d: KneadingSequence) -> KneadingSequence:
    """Shortest preperiod and period describing the same exact sequence."""
    if not d.is_exact:
        raise InvalidInput("normalize needs an exact sequence")
    pre, period = _canonical(d.preperiod, d.period)
    return KneadingSequence.exact(pre, period)


def shift_equal(d: KneadingSequence, j: int, k: int) -> ShiftRelation:
    """Compare ``sigma^j(d)`` with ``sigma^k(d)``.

    Exact sequences are always decided.  A prefix can only prove the shifts
    distinct; agreement on the shared horizon yields ``UNKNOWN``.
    """
    if j < 0 or k < 0:
        raise InvalidInput("shift indices must be nonnegative")
    if d.is_exact:
        same = _canonical(*d.tail(j)) == _canonical(*d.tail(k))
        return ShiftRelation.EQUAL if same else ShiftRelation.DISTINCT
    L = len(d.digits)
    if j >= L or k >= L:
        raise IndexBeyondHorizon(f"shift index {max(j, k)} not below horizon {L}")
    if j == k:
        return ShiftRelation.EQUAL
    overlap = L - max(j, k)
    if d.digits[j:j + overlap] != d.digits[k:k + overlap]:
        return ShiftRelation.DISTINCT
    return ShiftRelation.UNKNOWN
