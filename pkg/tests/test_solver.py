import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

import _reference as ref
from paretorule import gaussian
from paretorule.errors import DomainError
from paretorule.params import RulePoint
from paretorule.solver import ratio_from_point, round_to_5, rule_table, threshold_from_cause

PAPER_FAMILY = {1.7: (5, 25), 1.3: (10, 45), 1.1: (15, 60), 0.67: (25, 90)}


def bisect(f, lo, hi, tol=1e-13):
    """Plain bisection for a decreasing-sign change; independent of the solver path."""
    flo = f(lo)
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return 0.5 * (lo + hi)


@pytest.mark.parametrize("target, expected", [(0.2, ref.ISF_0_2), (0.5, 0.0), (0.0227501319, 2.0)])
def test_threshold_from_cause(target, expected):
    t = threshold_from_cause(target)
    assert t == pytest.approx(expected, abs=1e-8)
    assert abs(gaussian.i_cause(t) - target) <= 1e-12


def test_threshold_matches_bisection():
    for target in (0.01, 0.2, 0.37, 0.8, 0.99):
        t_bis = bisect(lambda t: gaussian.i_cause(t) - target, -9, 9)
        assert threshold_from_cause(target) == pytest.approx(t_bis, abs=1e-10)


@pytest.mark.parametrize("bad", [0.0, 1.0, -0.2, 1.3])
def test_threshold_domain(bad):
    with pytest.raises(DomainError):
        threshold_from_cause(bad)


def test_ratio_examples():
    assert ratio_from_point(RulePoint(0.2, 0.8)) == pytest.approx(ref.RATIO_80_20, abs=1e-12)
    assert ratio_from_point(RulePoint(0.2, ref.IE_AT_CAUSE_0_2_R2)) == pytest.approx(2.0, abs=1e-12)
    assert ratio_from_point(RulePoint(0.5, 0.5 + ref.PHI_0)) == pytest.approx(1.0, abs=1e-14)


@pytest.mark.parametrize("c, e", [(0.2, 0.8), (0.05, 0.25), (0.5, 1.3), (0.9, 0.95)])
def test_ratio_matches_bisection(c, e):
    t = threshold_from_cause(c)
    r_bis = bisect(lambda r: gaussian.i_effect(t, r) - e, 1e-9, 100.0)
    assert ratio_from_point(RulePoint(c, e)) == pytest.approx(r_bis, rel=1e-10)


@pytest.mark.parametrize("c, e", [(0.2, 0.1), (0.3, 0.3), (0.0, 0.5), (1.0, 1.2)])
def test_ratio_domain(c, e):
    with pytest.raises(DomainError):
        ratio_from_point(RulePoint(c, e))


@given(st.floats(min_value=1e-4, max_value=0.9999), st.floats(min_value=1e-6, max_value=10))
def test_round_trip(c, excess):
    e = c + excess
    r = ratio_from_point(RulePoint(c, e))
    p = gaussian.rule_point(threshold_from_cause(c), r)
    assert abs(p.i_cause - c) <= 1e-10
    assert abs(p.i_effect - e) <= 1e-10


@given(st.floats(min_value=0.01, max_value=0.99), st.floats(min_value=1e-3, max_value=5),
       st.floats(min_value=1e-3, max_value=5))
def test_ratio_increasing_in_effect(c, a, b):
    lo, hi = sorted((a, b))
    if hi - lo < 1e-9:
        return
    assert ratio_from_point(RulePoint(c, c + lo)) < ratio_from_point(RulePoint(c, c + hi))


@pytest.mark.parametrize("value, expected", [(0.0446, 5), (0.2327, 25), (0.5714, 55), (0.6027, 60),
                                             (0.075, 10), (0.0, 0), (1.2979, 130)])
def test_round_to_5(value, expected):
    assert round_to_5(value) == expected


def test_rule_table_paper_thresholds():
    rules = rule_table(2.0, thresholds=[1.7, 1.3, 1.1, 0.67])
    # 1.1 sigma at r = 2 rounds to 55/15; within 3 points of the published 60/15.
    assert [r.name for r in rules] == ["25/5", "45/10", "55/15", "90/25"]
    for rule in rules:
        cause_pct, effect_pct = rule.point.percentages()
        want_cause, want_effect = PAPER_FAMILY[rule.t]
        assert abs(cause_pct - want_cause) <= 3
        assert abs(effect_pct - want_effect) <= 3
        assert rule.point.i_effect > rule.point.i_cause
        assert abs(rule.rounded[0] - effect_pct) <= 3 and abs(rule.rounded[1] - cause_pct) <= 3


def test_rule_table_at_fitted_ratio_reads_60_15():
    r = ratio_from_point(RulePoint(0.2, 0.8))
    assert rule_table(r, thresholds=[1.1])[0].name == "60/15"


def test_rule_table_targets_and_empty_tail():
    (rule,) = rule_table(2.0, targets=[0.2])
    assert rule.name == "75/20"
    assert rule.point.i_effect == pytest.approx(ref.IE_AT_CAUSE_0_2_R2, abs=1e-12)
    assert rule_table(2.0, thresholds=[38.0])[0].name == "0/0"


def test_rule_table_argument_errors():
    with pytest.raises(DomainError):
        rule_table(2.0)
    with pytest.raises(DomainError):
        rule_table(2.0, targets=[0.2], thresholds=[1.0])
    with pytest.raises(DomainError):
        rule_table(2.0, targets=[1.5])
    with pytest.raises(DomainError):
        rule_table(-1.0, thresholds=[1.0])


def test_paper_names_within_bound_on_a_grid():
    # Rounding to the nearest 5 never moves a coordinate more than 2.5 points.
    for t in [x / 10 for x in range(-5, 41)]:
        rule = rule_table(2.0, thresholds=[t])[0]
        c, e = rule.point.percentages()
        assert abs(rule.rounded[1] - c) <= 2.5 + 1e-9
        assert abs(rule.rounded[0] - e) <= 2.5 + 1e-9
        assert math.isfinite(e)
