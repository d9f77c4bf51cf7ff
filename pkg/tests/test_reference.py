"""Recompute every frozen reference value from its mpmath oracle."""

import mpmath as mp
import pytest

import _reference as ref


def close(a, b):
    return abs(float(a) - b) <= 1e-15 * max(1.0, abs(b)) or mp.almosteq(mp.mpf(a), b, rel_eps=1e-14)


@pytest.mark.parametrize(
    "computed, frozen",
    [
        (lambda: ref.mp_pdf(0), ref.PHI_0),
        (lambda: ref.mp_pdf(1), ref.PHI_1),
        (lambda: ref.mp_sf(1), ref.SF_1),
        (lambda: ref.mp_sf(2), ref.SF_2),
        (lambda: ref.mp_sf(3), ref.SF_3),
        (lambda: ref.mp_isf("0.2"), ref.ISF_0_2),
        (lambda: ref.mp_isf("0.0013498980"), ref.ISF_SF3_ROUNDED),
        (lambda: mp.quad(lambda u: u * ref.mp_pdf(u), [mp.mpf("0.8416212336"), 8]), ref.UPHI_0_8416_TO_8),
        (lambda: ref.mp_pdf("0.5") / 2, ref.FIG3_PDF_AT_0),
        (lambda: ref.mp_i_effect(0, 2), ref.IE_T0_R2),
        (lambda: ref.mp_i_effect(mp.mpf("0.8416212336"), 2), ref.IE_T08416_R2),
        (lambda: ref.mp_i_effect(ref.mp_isf("0.2"), 2), ref.IE_AT_CAUSE_0_2_R2),
        (lambda: ref.mp_sf("0.5"), ref.NEG_CAUSE_R2),
        (lambda: ref.mp_sf(10), ref.NEG_CAUSE_R01),
        (lambda: ref.mp_negative_effect(2), ref.NEG_EFFECT_R2),
        (lambda: ref.mp_negative_effect("0.1"), ref.NEG_EFFECT_R01),
        (lambda: mp.mpf("0.6") / ref.mp_pdf(ref.mp_isf("0.2")), ref.RATIO_80_20),
        (lambda: mp.log(5) / mp.log(4), ref.ALPHA_80_20),
        (lambda: mp.mpf("0.5") + mp.mpf("0.5") * ref.mp_pdf(0), ref.CURVE_R05_T0),
        (lambda: -ref.mp_pdf(-1) / 2, ref.XF_AT_MINUS1),
    ],
)
def test_frozen_value_matches_oracle(computed, frozen):
    assert close(computed(), frozen)


@pytest.mark.parametrize("t", sorted(ref.RULE_POINTS_R2))
def test_frozen_rule_points(t):
    c, e = ref.RULE_POINTS_R2[t]
    assert close(ref.mp_sf(mp.mpf(str(t))), c)
    assert close(ref.mp_i_effect(mp.mpf(str(t)), 2), e)
