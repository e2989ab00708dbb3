from itertools import product

import pytest

from betashift.constructions import (
    RECIPES,
    battery,
    champernowne,
    lift_digits,
    named_example,
    prepend_symbol,
)
from betashift.errors import InvalidInput, ZeroTail
from betashift.kneading import KneadingSequence, solve_beta, validate_kneading
from betashift.language import subword_complexity


def factor_count(digits, n):
    return len({tuple(digits[i:i + n]) for i in range(len(digits) - n + 1)})


def test_lift():
    assert lift_digits([0, 1, 0, 0]) == [1, 2, 1, 1]


def test_lift_keeps_factor_count(rng):
    for _ in range(20):
        digits = [rng.randint(0, 2) for _ in range(30)]
        lifted = lift_digits(digits)
        assert all(factor_count(digits, n) == factor_count(lifted, n) for n in range(1, 6))


def test_champernowne():
    assert champernowne(2) == [0, 1, 0, 0, 0, 1, 1, 0, 1, 1]
    c = champernowne(5)
    assert len(c) == sum(k * 2 ** k for k in range(1, 6))
    assert all(factor_count(c, n) == 2 ** n for n in range(1, 5))
    with pytest.raises(InvalidInput):
        champernowne(0)


def test_prepend():
    d = prepend_symbol(champernowne(5))
    assert d.head(7) == (2, 0, 1, 0, 0, 0, 1)
    assert validate_kneading(d).valid
    d = prepend_symbol([0, 1] * 10)
    assert d.digits[0] == 2
    assert validate_kneading(d).valid


def test_prepend_zero_tail():
    with pytest.raises(ZeroTail):
        prepend_symbol([0, 0, 0])
    with pytest.raises(ZeroTail):
        prepend_symbol([])


def test_prepended_first_digit_strictly_largest(rng):
    for _ in range(20):
        digits = [rng.randint(0, 3) for _ in range(rng.randint(2, 30))]
        if not any(digits):
            continue
        d = prepend_symbol(digits)
        assert all(a < d.digits[0] for a in d.digits[1:])


def test_prepend_adds_one_factor(rng):
    for _ in range(20):
        digits = [rng.randint(0, 1) for _ in range(rng.randint(20, 40))]
        if not any(digits):
            digits[0] = 1
        d = prepend_symbol(digits)
        for n in range(1, 6):
            assert subword_complexity(d, n).value == factor_count(digits, n) + 1


def test_recipes():
    assert named_example("golden_mean").output == KneadingSequence.exact((), (1, 0))
    assert named_example("full_shift", k=1).output == KneadingSequence.exact((), (1,))
    assert solve_beta(named_example("full_shift", k=2).output, 1e-9) == (3, 3)
    d = named_example("beta_1_8_prefix", L=12).output
    assert d.digits == (1, 1, 0, 1, 0, 1, 0, 1, 0, 0, 1, 0)
    assert d.assert_aperiodic
    assert named_example("champernowne_tilde", max_block=2).output.digits == (2, 0, 1, 0, 0, 0, 1, 1, 0, 1, 1)


def test_recipe_errors():
    with pytest.raises(InvalidInput):
        named_example("silver_mean")
    with pytest.raises(InvalidInput):
        named_example("golden_mean", k=3)
    with pytest.raises(InvalidInput):
        named_example("full_shift", k=0)


def test_recipe_json():
    j = named_example("full_shift", k=2).to_json()
    assert j["name"] == "full_shift"
    assert j["parameters"] == {"k": 2}
    assert KneadingSequence.from_json(j["kneading"]) == KneadingSequence.exact((), (2,))


def test_battery_is_valid():
    bat = battery()
    assert sorted(bat) == sorted(["golden_mean", "full_shift_1", "full_shift_2", "shifted_golden",
                                  "beta_1_8", "champernowne_tilde"])
    assert set(RECIPES) >= {"golden_mean", "full_shift", "beta_1_8_prefix", "champernowne_tilde"}
    for d in bat.values():
        assert validate_kneading(d).valid


def test_dtilde_complexity_is_two_to_n_plus_one():
    d = battery()["champernowne_tilde"]
    assert [subword_complexity(d, n).value for n in range(1, 5)] == [3, 5, 9, 17]
    words = {d.window(i, 4) for i in range(d.horizon - 3)}
    assert set(product((0, 1), repeat=4)) <= words
