import pytest
from hypothesis import given, strategies as st

from tubular.slopes import (
    BASE_SLOPES, INF, MINUS_ONE, ONE, ZERO, Slope, SlopeError, SlopeType, UnfoldStep,
    arc_type, complexity, dist, dictated_step, half_floor, half_outer, normalize,
    parse_slope, reduce, replay, slope_type, slopes_up_to_complexity, slopes_up_to_height, unfold,
)
from conftest import slopes_st

L, D, U = UnfoldStep.L, UnfoldStep.D, UnfoldStep.U


def test_parse_and_print():
    assert parse_slope("7/4") == Slope(7, 4)
    assert parse_slope("-6/4") == Slope(-3, 2)
    assert parse_slope("3/-6") == Slope(-1, 2)
    assert parse_slope("inf") == parse_slope("∞") == INF
    assert str(Slope(7, 4)) == "7/4" and str(Slope(-2, 1)) == "-2" and str(INF) == "∞"


@pytest.mark.parametrize("bad", ["0/0", "x", "1/2/3", ""])
def test_parse_rejects(bad):
    with pytest.raises(SlopeError):
        parse_slope(bad)


def test_unreduced_pairs_rejected():
    for a, b in [(2, 4), (1, -1), (3, 0), (0, 2)]:
        with pytest.raises(SlopeError):
            Slope(a, b)


def test_order_puts_infinity_last():
    qs = [INF, ONE, MINUS_ONE, ZERO, Slope(1, 2)]
    assert sorted(qs) == [MINUS_ONE, ZERO, Slope(1, 2), ONE, INF]


def test_counts():
    assert len(slopes_up_to_height(10)) == 64
    assert len(slopes_up_to_height(20)) == 256
    assert len(slopes_up_to_height(40)) == 980
    assert len(slopes_up_to_complexity(13)) == 36
    assert len(slopes_up_to_complexity(25)) == 138


def test_types():
    assert slope_type(ZERO) is SlopeType.ZERO
    assert slope_type(ONE) is SlopeType.ONE
    assert slope_type(INF) is SlopeType.INF
    assert slope_type(Slope(7, 4)) is SlopeType.INF
    assert arc_type(ONE) == MINUS_ONE and arc_type(Slope(3, 5)) == MINUS_ONE
    assert arc_type(Slope(-2, 3)) == ZERO


def test_half_functions():
    assert [half_floor(n) for n in range(7)] == [0, 0, 1, 1, 2, 2, 3]
    assert [half_outer(n) for n in range(7)] == [0, 0, 0, 1, 1, 2, 2]
    assert half_floor(-3) == -2
    with pytest.raises(ValueError):
        half_outer(-1)


def test_reduce_seven_quarters():
    base, steps = reduce(Slope(7, 4))
    assert base == INF
    assert steps == [L, U, D, L, D]
    assert replay(base, steps) == Slope(7, 4)


def test_dist_examples():
    assert dist(Slope(1, 2), MINUS_ONE) == 3
    assert dist(Slope(7, 4), ZERO) == 7
    assert dist(Slope(7, 4), INF) == 4
    assert dist(ZERO, INF) == 1


def test_base_slopes_are_fixed_points_of_reduce():
    for t in BASE_SLOPES:
        assert complexity(t) == 2
        assert reduce(t) == (t, [])


@given(slopes_st(), st.sampled_from(list(UnfoldStep)))
def test_unfold_is_involution(p, f):
    assert unfold(unfold(p, f), f) == p


@given(slopes_st(), st.sampled_from(list(UnfoldStep)))
def test_unfold_preserves_type(p, f):
    assert arc_type(unfold(p, f)) == arc_type(p)


@given(slopes_st(), slopes_st(), st.sampled_from(list(UnfoldStep)))
def test_unfold_preserves_dist(p, q, f):
    assert dist(unfold(p, f), unfold(q, f)) == dist(p, q)


@given(slopes_st())
def test_dictated_step_decreases_complexity(p):
    step = dictated_step(p)
    if complexity(p) > 2:
        assert complexity(unfold(p, step)) < complexity(p)
    else:
        assert step is None


@given(slopes_st())
def test_reduce_lands_on_arc_type(p):
    base, steps = reduce(p)
    assert base == arc_type(p)
    assert replay(base, steps) == p


@given(st.integers(-200, 200), st.integers(-200, 200))
def test_normalize_is_projective(a, b):
    if a == 0 and b == 0:
        return
    p = normalize(a, b)
    assert p == normalize(-a, -b) == normalize(3 * a, 3 * b)
    assert a * p.b == b * p.a


@given(slopes_st())
def test_str_round_trip(p):
    assert parse_slope(str(p)) == p
