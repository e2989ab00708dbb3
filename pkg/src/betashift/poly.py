"""Exact polynomial arithmetic over the rationals and certified root isolation.

Polynomials are tuples of :class:`~fractions.Fraction` coefficients, lowest
degree first, with no trailing zeros. The zero polynomial is ``()``.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Poly = tuple


def make(coeffs: Iterable) -> Poly:
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def degree(p: Poly) -> int:
    return len(p) - 1


def evaluate(p: Poly, x) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def add(p: Poly, q: Poly) -> Poly:
    n = max(len(p), len(q))
    return make((p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n))


def sub(p: Poly, q: Poly) -> Poly:
    return add(p, tuple(-c for c in q))


def scale(p: Poly, c) -> Poly:
    return make(a * c for a in p)


def mul(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return ()
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return make(out)


def shift_up(p: Poly, k: int = 1) -> Poly:
    """Multiply by ``x**k``."""
    return make((Fraction(0),) * k + tuple(p)) if p else ()


def derivative(p: Poly) -> Poly:
    return make(i * c for i, c in enumerate(p) if i > 0)


def divmod_(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a)
    quot = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    db = len(b) - 1
    while len(rem) - 1 >= db and rem:
        shift = len(rem) - 1 - db
        factor = rem[-1] / lead
        quot[shift] = factor
        for i, c in enumerate(b):
            rem[shift + i] -= factor * c
        rem.pop()
        while rem and rem[-1] == 0:
            rem.pop()
    return make(quot), make(rem)


def mod(a: Poly, b: Poly) -> Poly:
    return divmod_(a, b)[1]


def monic(p: Poly) -> Poly:
    return scale(p, 1 / p[-1]) if p else ()


def gcd(a: Poly, b: Poly) -> Poly:
    while b:
        a, b = b, mod(a, b)
    return monic(a)


def squarefree(p: Poly) -> Poly:
    g = gcd(p, derivative(p))
    return monic(divmod_(p, g)[0]) if degree(g) > 0 else monic(p)


def interval_eval(p: Poly, lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
    """Enclose ``p([lo, hi])`` for ``0 <= lo <= hi``.

    Each monomial is monotone on the nonnegative axis, so positive and
    negative coefficients are bounded separately.
    """
    if lo < 0:
        raise ValueError("interval_eval needs a nonnegative interval")
    low = Fraction(0)
    high = Fraction(0)
    plo = Fraction(1)
    phi = Fraction(1)
    for c in p:
        if c > 0:
            low += c * plo
            high += c * phi
        elif c < 0:
            low += c * phi
            high += c * plo
        plo *= lo
        phi *= hi
    return low, high


def sturm_sequence(p: Poly) -> list[Poly]:
    seq = [p, derivative(p)]
    while seq[-1]:
        r = mod(seq[-2], seq[-1])
        if not r:
            break
        seq.append(scale(r, -1))
    return seq


def _sign_changes(values: Sequence[Fraction]) -> int:
    signs = [v > 0 for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots(p: Poly, lo: Fraction, hi: Fraction) -> int:
    """Number of distinct real roots of ``p`` in the half-open interval ``(lo, hi]``."""
    seq = sturm_sequence(p)
    return _sign_changes([evaluate(s, lo) for s in seq]) - _sign_changes([evaluate(s, hi) for s in seq])


def has_root_in(p: Poly, lo: Fraction, hi: Fraction) -> bool:
    """Whether ``p`` vanishes somewhere in the closed interval ``[lo, hi]``."""
    if not p:
        return True
    if degree(p) == 0:
        return False
    if evaluate(p, lo) == 0:
        return True
    return count_roots(p, lo, hi) > 0


class RealRoot:
    """The unique real root of a rational polynomial inside an isolating interval.

    The interval is narrowed by exact bisection on demand; once a bisection
    midpoint hits the root exactly the enclosure collapses to a point.
    """

    def __init__(self, p: Poly, lo: Fraction, hi: Fraction):
        self.poly = make(p)
        lo, hi = Fraction(lo), Fraction(hi)
        if lo > hi:
            raise ValueError("empty isolating interval")
        if degree(self.poly) < 1:
            raise ValueError("polynomial must have positive degree")
        self.lo, self.hi = lo, hi
        if evaluate(self.poly, lo) == 0:
            self.hi = lo
        elif evaluate(self.poly, hi) == 0:
            self.lo = hi
        elif lo == hi or count_roots(self.poly, lo, hi) != 1:
            raise ValueError("interval does not isolate exactly one root")
        if self.lo < self.hi:
            self._sign_lo = evaluate(self.poly, self.lo) > 0
            if self._sign_lo == (evaluate(self.poly, self.hi) > 0):
                # even-multiplicity root: bisect on the square-free part
                self.poly_sf = squarefree(self.poly)
                self._sign_lo = evaluate(self.poly_sf, self.lo) > 0
            else:
                self.poly_sf = self.poly
        else:
            self.poly_sf = self.poly

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    def enclosure(self, bits: int) -> tuple[Fraction, Fraction]:
        """Return ``(lo, hi)`` with ``hi - lo <= 2**-bits`` containing the root."""
        target = Fraction(1, 2 ** bits)
        while self.hi - self.lo > target:
            mid = (self.lo + self.hi) / 2
            v = evaluate(self.poly_sf, mid)
            if v == 0:
                self.lo = self.hi = mid
                break
            if (v > 0) == self._sign_lo:
                self.lo = mid
            else:
                self.hi = mid
        return self.lo, self.hi

    def vanishes_on(self, q: Poly) -> bool:
        """Exact test of ``q(root) == 0``."""
        if not q:
            return True
        if self.is_exact:
            return evaluate(q, self.lo) == 0
        g = gcd(self.poly, q)
        if degree(g) < 1:
            return False
        return count_roots(squarefree(g), self.lo, self.hi) > 0 or evaluate(g, self.lo) == 0
