import itertools

import pytest
from hypothesis import given, strategies as st

from fortdesign.cardinal import (
    ALEPH0,
    Cardinal,
    LambdaValue,
    cdouble,
    compare,
    csum,
    pfin_card,
)

GRID = [Cardinal.finite(n) for n in range(11)] + [Cardinal.aleph(i) for i in range(4)]

cardinals = st.one_of(
    st.integers(0, 50).map(Cardinal.finite),
    st.integers(0, 3).map(Cardinal.aleph),
)


def test_compare_examples():
    assert compare(Cardinal.finite(3), Cardinal.finite(3)) == 0
    assert compare(Cardinal.finite(10**9), ALEPH0) == -1
    assert compare(ALEPH0, Cardinal.aleph(1)) == -1


def test_compare_is_a_total_order_on_the_grid():
    for a, b in itertools.product(GRID, repeat=2):
        assert compare(a, b) == -compare(b, a)
        assert (compare(a, b) == 0) == (a == b)
    for a, b, c in itertools.product(GRID, repeat=3):
        if compare(a, b) <= 0 and compare(b, c) <= 0:
            assert compare(a, c) <= 0


def test_csum_examples():
    assert csum(Cardinal.finite(2), Cardinal.finite(3)) == Cardinal.finite(5)
    assert csum(Cardinal.finite(7), ALEPH0) == ALEPH0
    assert csum(ALEPH0, Cardinal.aleph(1)) == Cardinal.aleph(1)


def test_csum_commutative_and_associative_on_the_grid():
    for a, b in itertools.product(GRID, repeat=2):
        assert csum(a, b) == csum(b, a)
    for a, b, c in itertools.product(GRID, repeat=3):
        assert csum(csum(a, b), c) == csum(a, csum(b, c))


def test_csum_is_max_when_infinite():
    for a, b in itertools.product(GRID, repeat=2):
        if not max(a, b).is_finite:
            assert csum(a, b) == max(a, b)


def test_cdouble_examples():
    assert cdouble(Cardinal.finite(4)) == Cardinal.finite(8)
    assert cdouble(ALEPH0) == ALEPH0
    assert cdouble(Cardinal.aleph(2)) == Cardinal.aleph(2)


def test_cdouble_matches_self_sum_on_the_grid():
    for a in GRID:
        assert cdouble(a) == csum(a, a)


def test_pfin_card():
    assert pfin_card(ALEPH0) == ALEPH0
    assert pfin_card(Cardinal.aleph(1)) == Cardinal.aleph(1)
    with pytest.raises(ValueError):
        pfin_card(Cardinal.finite(3))


def test_construction_limits():
    with pytest.raises(ValueError):
        Cardinal.finite(-1)
    with pytest.raises(ValueError):
        Cardinal.aleph(4)


@given(cardinals)
def test_string_round_trip(card):
    assert Cardinal.parse(str(card)) == card


def test_string_format():
    assert str(Cardinal.finite(3)) == "3"
    assert str(ALEPH0) == "aleph0"
    assert str(Cardinal.aleph(1)) == "aleph1"
    with pytest.raises(ValueError):
        Cardinal.parse("alephx")
    with pytest.raises(ValueError):
        Cardinal.parse("-2")


def test_lambda_value():
    lam = LambdaValue.exact(ALEPH0)
    assert str(lam) == "aleph0"
    assert str(LambdaValue.family_size("W")) == "card(W)"
    with pytest.raises(ValueError):
        LambdaValue.exact(Cardinal.finite(0))
    with pytest.raises(ValueError):
        LambdaValue(value=ALEPH0, family="W")
    with pytest.raises(ValueError):
        LambdaValue()
