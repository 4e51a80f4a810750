from fractions import Fraction
from math import gcd

import pytest

from cosmetic.dedekind import (
    dedekind_equal,
    dedekind_sum_direct,
    dedekind_sum_fast,
    sawtooth,
)


def test_sawtooth_values():
    assert sawtooth(5) == 0
    assert sawtooth(Fraction(1, 2)) == 0
    assert sawtooth(Fraction(1, 4)) == Fraction(-1, 4)
    assert sawtooth(Fraction(-1, 4)) == Fraction(1, 4)
    assert sawtooth(Fraction(7, 3)) == Fraction(-1, 6)


def test_sawtooth_odd_and_periodic():
    for den in range(1, 13):
        for num in range(-30, 31):
            x = Fraction(num, den)
            assert sawtooth(-x) == -sawtooth(x)
            assert sawtooth(x + 1) == sawtooth(x)


def test_direct_matches_sawtooth_definition():
    """The integer-arithmetic form is literally the defining sum."""
    for p in range(1, 61):
        for q in range(1, p + 1):
            if gcd(q, p) != 1:
                continue
            naive = sum(
                (sawtooth(Fraction(k, p)) * sawtooth(Fraction(k * q, p))
                 for k in range(1, p)),
                Fraction(0),
            )
            assert dedekind_sum_direct(q, p) == naive


def test_golden_values_mod_7():
    assert dedekind_sum_direct(5, 7) == Fraction(-1, 14)
    assert dedekind_sum_direct(6, 7) == Fraction(-5, 14)
    assert dedekind_sum_direct(1, 7) == Fraction(5, 14)
    assert dedekind_sum_direct(2, 7) == Fraction(1, 14)


def test_small_and_closed_form_values():
    assert dedekind_sum_direct(0, 1) == 0
    assert dedekind_sum_direct(1, 1) == 0
    assert dedekind_sum_direct(1, 2) == 0
    assert dedekind_sum_direct(2, 5) == 0
    assert dedekind_sum_direct(3, 5) == 0
    # s(1, p) = (p - 1)(p - 2) / 12p, an independent closed form
    for p in range(1, 40):
        assert dedekind_sum_direct(1, p) == Fraction((p - 1) * (p - 2), 12 * p)


def test_rejects_bad_input():
    with pytest.raises(ValueError):
        dedekind_sum_direct(2, 4)
    with pytest.raises(ValueError):
        dedekind_sum_fast(2, 4)
    with pytest.raises(ValueError):
        dedekind_sum_fast(1, 0)


def test_fast_equals_direct_small():
    for p in range(1, 61):
        for q in range(-p, 2 * p):
            if gcd(q, p) != 1:
                continue
            assert dedekind_sum_fast(q, p) == dedekind_sum_direct(q, p)


def test_odd_in_p():
    for p in range(2, 40):
        for q in range(1, p):
            if gcd(q, p) != 1:
                continue
            assert dedekind_sum_fast(q, -p) == -dedekind_sum_fast(q, p)
            assert dedekind_sum_direct(q, -p) == -dedekind_sum_direct(q, p)


def test_periodic_in_q():
    for p in range(1, 201):
        for q in range(1, p + 1):
            if gcd(q, p) != 1:
                continue
            s = dedekind_sum_fast(q, p)
            assert dedekind_sum_fast(q + p, p) == s
            assert dedekind_sum_fast(q - 3 * p, p) == s


def test_odd_in_q():
    for p in range(1, 201):
        for q in range(1, p + 1):
            if gcd(q, p) != 1:
                continue
            assert dedekind_sum_fast(-q, p) == -dedekind_sum_fast(q, p)


def test_reciprocity():
    for p in range(1, 81):
        for q in range(1, p):
            if gcd(q, p) != 1:
                continue
            lhs = dedekind_sum_fast(q, p) + dedekind_sum_fast(p, q)
            rhs = Fraction(-1, 4) + (
                Fraction(p, q) + Fraction(q, p) + Fraction(1, p * q)
            ) / 12
            assert lhs == rhs


def test_dedekind_equal():
    assert dedekind_equal(2, 3, 5)
    assert not dedekind_equal(5, 6, 7)
    assert dedekind_equal(1, 8, 7)
