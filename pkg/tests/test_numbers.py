from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from okx.numbers import Eps, format_rational, limit, parse_rational_list, to_fraction

fractions = st.fractions(max_denominator=50).filter(lambda q: abs(q) < 100)


def test_to_fraction_accepts_exact_inputs():
    assert to_fraction(3) == 3
    assert to_fraction("2/3") == Fraction(2, 3)
    assert to_fraction(Fraction(1, 2)) == Fraction(1, 2)


@pytest.mark.parametrize("bad", [0.5, True, "abc", None])
def test_to_fraction_rejects_floats_and_junk(bad):
    with pytest.raises((TypeError, ValueError)):
        to_fraction(bad)


def test_parse_and_format_round_trip():
    v = parse_rational_list("1,-1/2, 3/4")
    assert v == (1, Fraction(-1, 2), Fraction(3, 4))
    assert ",".join(format_rational(x) for x in v) == "1,-1/2,3/4"


def test_eps_orders_by_lowest_coefficient():
    e = Eps.infinitesimal()
    assert 0 < e < Fraction(1, 10**12)
    assert -e < 0
    assert 1 - e < 1
    assert e * e < e
    assert 2 * e > e


def test_eps_arithmetic_and_limit():
    e = Eps.infinitesimal()
    x = (3 + 2 * e) / 2
    assert limit(x) == Fraction(3, 2)
    assert (e - e) == 0
    assert limit(Fraction(5)) == 5


@given(fractions, fractions, fractions)
def test_eps_sign_matches_small_evaluation(a, b, c):
    x = Eps((a, b, c))
    sign = x.sign()
    val = x.at(Fraction(1, 10**9))
    if sign:
        assert (val > 0) == (sign > 0)
    else:
        assert a == b == c == 0
