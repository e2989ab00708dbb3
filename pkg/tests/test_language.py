from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from betashift.constructions import champernowne, prepend_symbol
from betashift.errors import HorizonExceeded, InvalidInput
from betashift.kneading import KneadingSequence
from betashift.language import (
    enumerate_language,
    failure_function,
    is_admissible,
    parse_word,
    subword_complexity,
    suffix_class,
    window_set,
    word_str,
)
from betashift.report import Status

from conftest import EXACT_BATTERY, FULL1, GOLDEN, SHIFTED_GOLDEN, exact_kneading, random_admissible


def brute_language(d, n):
    return [w for w in product(range(d.alphabet_max + 1), repeat=n) if is_admissible(w, d)]


def brute_suffix_class(w, d):
    head = d.head(len(w))
    return max(k for k in range(len(w) + 1) if w[len(w) - k:] == head[:k])


def compare_infinite(d, a, b, span):
    """-1/0/1 comparing sigma^a(d) and sigma^b(d) over ``span`` digits."""
    x, y = d.window(a, span), d.window(b, span)
    return (x > y) - (x < y)


class TestAdmissible:
    def test_golden(self):
        assert not is_admissible((1, 1), GOLDEN)
        assert is_admissible((0, 1, 0), GOLDEN)
        assert is_admissible((), GOLDEN)

    def test_shifted_golden(self):
        assert not is_admissible((2, 1, 2), SHIFTED_GOLDEN)
        assert is_admissible((2, 1, 0), SHIFTED_GOLDEN)

    def test_golden_means_no_11(self):
        for n in range(1, 9):
            for w in product((0, 1), repeat=n):
                has_11 = any(w[i] == w[i + 1] == 1 for i in range(n - 1))
                assert is_admissible(w, GOLDEN) == (not has_11)

    def test_horizon(self):
        with pytest.raises(HorizonExceeded):
            is_admissible((0, 0, 0), KneadingSequence.prefix([1, 0]))

    def test_negative_digit(self):
        with pytest.raises(InvalidInput):
            is_admissible((0, -1), GOLDEN)


class TestEnumerate:
    def test_examples(self):
        assert enumerate_language(GOLDEN, 2) == [(0, 0), (0, 1), (1, 0)]
        assert enumerate_language(FULL1, 2) == [(0, 0), (0, 1), (1, 0), (1, 1)]
        assert enumerate_language(SHIFTED_GOLDEN, 1) == [(0,), (1,), (2,)]
        assert enumerate_language(GOLDEN, 0) == [()]

    @pytest.mark.parametrize("d", EXACT_BATTERY, ids=str)
    def test_matches_unpruned_brute_force(self, d):
        for n in range(0, 9 if d.alphabet_max == 1 else 7):
            assert enumerate_language(d, n) == brute_language(d, n)

    @settings(max_examples=40, deadline=None)
    @given(exact_kneading(max_digit=2), st.integers(0, 6))
    def test_random_sequences(self, d, n):
        assert enumerate_language(d, n) == brute_language(d, n)

    def test_prefix_horizon(self):
        d = KneadingSequence.prefix([1, 0, 1])
        assert enumerate_language(d, 3) == brute_language(d, 3)
        with pytest.raises(HorizonExceeded):
            enumerate_language(d, 4)

    @pytest.mark.parametrize("d", EXACT_BATTERY, ids=str)
    def test_factor_closed(self, d):
        for n in range(1, 9):
            for w in enumerate_language(d, n):
                assert all(is_admissible(w[i:], d) for i in range(n))
                assert is_admissible(w[:-1], d)


class TestComplexity:
    def test_examples(self):
        r = subword_complexity(GOLDEN, 3)
        assert (r.value, r.status) == (2, Status.EXACT)
        assert subword_complexity(SHIFTED_GOLDEN, 2).value == 3
        assert window_set(SHIFTED_GOLDEN, 2).windows == ((0, 1), (1, 0), (2, 1))
        assert subword_complexity(GOLDEN, 0).value == 1

    def test_champernowne_tilde(self):
        d = prepend_symbol(champernowne(5), assert_aperiodic=True)
        r = subword_complexity(d, 2)
        assert (r.value, r.status) == (5, Status.LOWER_BOUND)

    @settings(max_examples=40, deadline=None)
    @given(exact_kneading())
    def test_exact_matches_long_scan_and_saturates(self, d):
        m, q = len(d.preperiod), len(d.period)
        long = d.head(m + 6 * q + 20)
        values = []
        for n in range(1, 9):
            scanned = {long[i:i + n] for i in range(len(long) - n + 1)}
            values.append(subword_complexity(d, n).value)
            assert values[-1] == len(scanned)
        assert values == sorted(values)
        assert values[-1] <= m + q

    def test_prefix_monotone(self, dtilde, beta18):
        for d in (dtilde, beta18):
            values = [subword_complexity(d, n).value for n in range(1, 12)]
            assert values == sorted(values)


class TestSuffixClass:
    def test_examples(self):
        assert suffix_class((0, 1, 0), GOLDEN) == 2
        assert suffix_class((0, 0, 0), GOLDEN) == 0
        for d in EXACT_BATTERY:
            for n in range(1, 7):
                assert suffix_class(d.head(n), d) == n

    def test_failure_function(self):
        assert failure_function((1, 0, 1, 0, 1)) == [0, 0, 1, 2, 3]
        assert failure_function((2, 0, 1, 0, 0, 0, 1)) == [0] * 7

    @pytest.mark.parametrize("d", EXACT_BATTERY, ids=str)
    def test_against_brute_force(self, d):
        for n in range(1, 8):
            for w in enumerate_language(d, n):
                k = suffix_class(w, d)
                assert k == brute_suffix_class(w, d)
                assert w[n - k:] == d.head(k)

    def test_prefix_sequences(self, dtilde, beta18, rng):
        for d in (dtilde, beta18):
            for _ in range(200):
                w = random_admissible(d, rng.randint(1, 15), rng)
                assert suffix_class(w, d) == brute_suffix_class(w, d)


def dominance_violations(d, w, span):
    """Pairs k < j of matched prefix lengths where sigma^j(d) exceeds sigma^k(d)."""
    n = len(w)
    matched = [k for k in range(n + 1) if w[n - k:] == d.head(k)]
    j = max(matched)
    bad = []
    for k in matched:
        if k < j:
            width = span if d.is_exact else d.horizon - j
            if compare_infinite(d, j, k, width) > 0:
                bad.append((k, j))
    return bad


@pytest.mark.parametrize("name", ["golden_mean", "full_shift_1", "full_shift_2", "shifted_golden",
                                  "beta_1_8", "champernowne_tilde"])
def test_nested_prefix_dominance(bat, name, rng):
    d = bat[name]
    span = None if not d.is_exact else 2 * (len(d.preperiod) + len(d.period)) + 2
    for _ in range(150):
        w = random_admissible(d, rng.randint(1, 14), rng)
        assert dominance_violations(d, w, span) == []


def test_word_text_round_trip():
    assert parse_word("0,1,0") == (0, 1, 0)
    assert parse_word("201") == (2, 0, 1)
    assert parse_word("") == ()
    assert word_str((2, 0, 1)) == "201"
    assert word_str((10, 1)) == "10,1"
    with pytest.raises(InvalidInput):
        parse_word("0,x")
