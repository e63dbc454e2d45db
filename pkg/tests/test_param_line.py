from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cevian_lab import INF, BothZero, ExtParam, PositionClass, classify_position, ext_param, parse_param
from cevian_lab.param_line import as_param

pairs = st.tuples(st.integers(-500, 500), st.integers(-500, 500)).filter(lambda t: t != (0, 0))


@pytest.mark.parametrize(
    "num, den, p, q",
    [(1, 2, 1, 2), (3, 0, 1, 0), (-3, 0, 1, 0), (-4, -6, 2, 3), (4, -6, -2, 3), (0, -5, 0, 1)],
)
def test_ext_param_canonical(num, den, p, q):
    t = ext_param(num, den)
    assert (t.p, t.q) == (p, q)


def test_both_zero():
    with pytest.raises(BothZero):
        ext_param(0, 0)


@given(pairs)
def test_canonicalization_idempotent(ab):
    t = ext_param(*ab)
    assert ext_param(t.p, t.q) == t


@given(pairs, pairs)
def test_equality_is_cross_multiplication(ab, cd):
    (a, b), (c, d) = ab, cd
    assert (ext_param(a, b) == ext_param(c, d)) == (a * d == c * b)


@pytest.mark.parametrize(
    "text, expected",
    [
        ("3", ExtParam(3, 1)),
        ("-4/7", ExtParam(-4, 7)),
        ("+4/6", ExtParam(2, 3)),
        ("inf", INF),
        ("INF", INF),
        ("∞", INF),
        ("5/0", INF),
        (" 0 ", ExtParam(0, 1)),
    ],
)
def test_parse(text, expected):
    assert parse_param(text) == expected


@pytest.mark.parametrize("text", ["", "1/2/3", "x", "1.5", "1/-2", "--1"])
def test_parse_rejects(text):
    with pytest.raises(ValueError):
        parse_param(text)


def test_parse_zero_over_zero():
    with pytest.raises(BothZero):
        parse_param("0/0")


@given(pairs)
def test_str_round_trip(ab):
    t = ext_param(*ab)
    assert parse_param(str(t)) == t


def test_as_param():
    assert as_param(Fraction(-6, 4)) == ExtParam(-3, 2)
    assert as_param(2) == ExtParam(2, 1)
    assert as_param(float("inf")) == INF
    with pytest.raises(TypeError):
        as_param(0.5)
    with pytest.raises(TypeError):
        as_param(True)


@pytest.mark.parametrize(
    "t, cls",
    [
        (ExtParam(0, 1), PositionClass.AT_B),
        (INF, PositionClass.AT_C),
        (ExtParam(-1, 1), PositionClass.AT_INFINITY),
        (ExtParam(1, 3), PositionClass.BETWEEN_B_C),
        (ExtParam(-1, 2), PositionClass.BEYOND_B),
        (ExtParam(-3, 2), PositionClass.BEYOND_C),
    ],
)
def test_classify_examples(t, cls):
    assert classify_position(t) is cls


def test_classify_partitions_grid():
    grid = {ext_param(n, d) for n in range(-12, 13) for d in range(1, 13)} | {INF}
    for t in grid:
        v = t.value
        expected = [
            t == INF,
            v == 0,
            v is not None and v > 0,
            v is not None and -1 < v < 0,
            v is not None and v < -1,
            v == -1,
        ]
        assert sum(expected) == 1
        order = [
            PositionClass.AT_C,
            PositionClass.AT_B,
            PositionClass.BETWEEN_B_C,
            PositionClass.BEYOND_B,
            PositionClass.BEYOND_C,
            PositionClass.AT_INFINITY,
        ]
        assert classify_position(t) is order[expected.index(True)]
