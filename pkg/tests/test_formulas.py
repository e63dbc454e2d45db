import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cevian_lab import (
    INF,
    ExtParam,
    PairClass,
    RatioUndefined,
    RouthConfig,
    Triangle,
    ceva_concurrent,
    cevial_ratio,
    collinear,
    generalized_ratio,
    generalized_routh_points,
    is_degenerate,
    menelaus_collinear,
    routh_ratio,
)

from conftest import brute_ratio, ext_params

F = Fraction
ZERO = ExtParam(0, 1)


def test_generalized_examples():
    assert generalized_ratio(RouthConfig(2, 2, 2, 2, 2, 2)).value == F(1, 7)
    assert generalized_ratio(RouthConfig.uniform(1, 4)).value == F(1, 9)
    assert generalized_ratio(RouthConfig(INF, INF, INF, 0, 0, 0)).value == 1


def test_generalized_derived_value():
    # frozen from the test-side shoelace/Cramer oracle: brute_ratio(2, 3, 5, 1, 1, 1)
    expected = F(6, 77)
    assert brute_ratio(2, 3, 5, 1, 1, 1) == expected
    assert generalized_ratio(RouthConfig(2, 3, 5, 1, 1, 1)).value == expected


def test_cevial_examples():
    assert cevial_ratio(1, 1, 1).value == F(1, 4)
    with pytest.raises(RatioUndefined):
        cevial_ratio(1, 1, -1)
    r = cevial_ratio(2, 1, F(-1, 2))
    assert r.value == 0 and r.degenerate_numerator


@pytest.mark.parametrize(
    "xyz, expected",
    [((2, 2, 2), F(1, 7)), ((4, 4, 4), F(3, 7)), ((1, 1, 1), F(0)), ((7, 6, 3), F(1, 2)), ((7, 4, 1), F(1, 4))],
)
def test_routh_examples(xyz, expected):
    assert routh_ratio(*xyz).value == expected


def test_routh_against_brute_force():
    rng = random.Random(2)
    checked = 0
    while checked < 300:
        x, y, z = (F(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(3))
        if 0 in (1 + x + x * y, 1 + y + y * z, 1 + z + z * x) or -1 in (x, y, z):
            continue
        assert routh_ratio(x, y, z).value == brute_ratio(x, y, z, x, y, z)
        assert cevial_ratio(x, y, z).value == brute_ratio(x, y, z, 0, 0, 0)
        checked += 1


def test_undefined_carries_diagnosis():
    with pytest.raises(RatioUndefined) as exc:
        generalized_ratio(RouthConfig(0, 1, 1, 1, INF, 1))
    assert exc.value.diagnosis == ("P", PairClass.COINCIDENT)
    with pytest.raises(RatioUndefined) as exc:
        generalized_ratio(RouthConfig(1, INF, 1, 1, 1, -1))
    assert exc.value.diagnosis == ("Q", PairClass.PARALLEL)


def test_is_degenerate_examples():
    assert is_degenerate(RouthConfig(2, 1, F(-1, 2), 0, 0, 0))
    assert is_degenerate(RouthConfig(1, 1, 1, 1, 1, 1))
    assert not is_degenerate(RouthConfig(2, 2, 2, 2, 2, 2))
    with pytest.raises(RatioUndefined):
        is_degenerate(RouthConfig(0, 1, 1, 1, INF, 1))


def test_ceva_examples():
    assert ceva_concurrent(1, 1, 1)
    assert ceva_concurrent(2, 2, F(1, 4))
    assert not ceva_concurrent(2, 2, 2)
    # AA_inf = AC and BB_0 = BC meet at C, which lies on every cevian from C
    assert ceva_concurrent(INF, 0, 1)
    with pytest.raises(RatioUndefined):
        ceva_concurrent(INF, -1, 1)


def test_menelaus_examples():
    assert menelaus_collinear(2, 1, F(-1, 2))
    assert not menelaus_collinear(1, 1, 1)
    assert menelaus_collinear(-2, 1, F(1, 2))
    with pytest.raises(RatioUndefined):
        menelaus_collinear(-1, 2, 3)


def _maybe(fn, *args):
    try:
        return fn(*args).value
    except RatioUndefined:
        return None


six = st.tuples(*[ext_params()] * 6)


@settings(max_examples=400)
@given(six)
def test_specializations(params):
    x, y, z, u, v, w = params
    assert _maybe(generalized_ratio, RouthConfig(x, y, z, x, y, z)) == _maybe(routh_ratio, x, y, z)
    assert _maybe(generalized_ratio, RouthConfig(x, y, z, 0, 0, 0)) == _maybe(cevial_ratio, x, y, z)
    assert _maybe(generalized_ratio, RouthConfig(INF, INF, INF, u, v, w)) == _maybe(cevial_ratio, u, v, w)


@settings(max_examples=400)
@given(six)
def test_cyclic_symmetry(params):
    cfg = RouthConfig(*params)
    assert _maybe(generalized_ratio, cfg) == _maybe(generalized_ratio, cfg.rotated())


@settings(max_examples=400)
@given(six, st.integers(1, 50).flatmap(lambda k: st.sampled_from([k, -k])), st.integers(0, 5))
def test_scale_free(params, k, slot):
    cfg = RouthConfig(*params)
    scaled = list(params)
    t = scaled[slot]
    scaled[slot] = ExtParam(k * t.p, k * t.q)
    assert _maybe(generalized_ratio, cfg) == _maybe(generalized_ratio, RouthConfig(*scaled))


@settings(max_examples=300)
@given(six)
def test_degenerate_iff_collinear(params):
    cfg = RouthConfig(*params)
    try:
        flag = is_degenerate(cfg)
    except RatioUndefined:
        return
    P, Q, R = generalized_routh_points(Triangle.canonical(), cfg)
    assert flag == collinear(P, Q, R)


@settings(max_examples=300)
@given(st.tuples(*[ext_params()] * 3))
def test_ratio_result_flag_matches_value(xyz):
    for fn in (routh_ratio, cevial_ratio):
        try:
            r = fn(*xyz)
        except RatioUndefined:
            continue
        assert r.degenerate_numerator == (r.value == 0)


def test_ratio_json():
    assert generalized_ratio(RouthConfig(2, 2, 2, 2, 2, 2)).to_json() == {
        "numerator": "1",
        "denominator": "7",
        "degenerate": False,
    }
