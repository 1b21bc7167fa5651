import math

import numpy as np
import pytest
from hypothesis import given

from conftest import noise
from dircorr import thresholds
from dircorr.errors import DomainError, OracleError
from dircorr.thresholds import Criterion, bisection_threshold, closed_form_thresholds, criterion_margin

LN_SQRT2 = 0.346573590279972655


class TestClosedForm:
    def test_noiseless(self):
        t = closed_form_thresholds(0, 0)
        assert (t.r_ent, t.r_steer_ab, t.r_steer_ba, t.r_qt_duan) == (0.0, 0.0, 0.0, 0.0)
        assert t.r_st_duan == pytest.approx(LN_SQRT2, abs=1e-15)

    def test_one_noisy_mode(self):
        t = closed_form_thresholds(0, 1)
        assert t.r_ent == 0.0 and t.r_steer_ab == 0.0
        assert t.r_steer_ba == pytest.approx(0.658478948462408354, abs=1e-14)
        assert t.r_qt_duan == pytest.approx(LN_SQRT2, abs=1e-15)

    def test_equal_noise(self):
        # arccosh(sqrt(4/3))
        assert closed_form_thresholds(1, 1).r_ent == pytest.approx(0.549306144334054846, abs=1e-14)

    def test_negative_noise(self):
        with pytest.raises(DomainError):
            closed_form_thresholds(-0.1, 0)

    def test_for_criterion(self):
        t = closed_form_thresholds(0.5, 2)
        assert t.for_criterion(Criterion.STEER_BA) == t.r_steer_ba
        assert t.for_criterion("DUAN_QT") == t.r_qt_duan
        assert set(t.to_dict()) == {"r_ent", "r_steer_ab", "r_steer_ba", "r_qt_duan", "r_st_duan"}

    @given(noise, noise)
    def test_exchange_symmetry(self, a, b):
        assert closed_form_thresholds(a, b).r_steer_ab == closed_form_thresholds(b, a).r_steer_ba

    @given(noise, noise)
    def test_orderings(self, a, b):
        t = closed_form_thresholds(a, b)
        assert t.r_ent <= min(t.r_steer_ab, t.r_steer_ba)
        assert t.r_qt_duan <= t.r_st_duan

    def test_one_way_state_lies_between_thresholds(self):
        t = closed_form_thresholds(0, 1)
        assert t.r_steer_ab < 0.6 < t.r_steer_ba


class TestBisection:
    def test_equal_noise_entanglement(self):
        got = bisection_threshold(1, 1, Criterion.ENT_PPT, r_max=5)
        assert got == pytest.approx(closed_form_thresholds(1, 1).r_ent, abs=1e-8)

    def test_steering_ba(self):
        assert bisection_threshold(0, 1, "STEER_BA", 5) == pytest.approx(0.658478948462408354, abs=1e-8)

    def test_secure_duan(self):
        assert bisection_threshold(0, 0, Criterion.DUAN_ST, 5) == pytest.approx(LN_SQRT2, abs=1e-8)

    def test_already_satisfied(self):
        assert bisection_threshold(0, 1, Criterion.STEER_AB) == 0.0

    def test_not_reached(self):
        assert bisection_threshold(3, 3, Criterion.DUAN_ST, r_max=0.2) is None

    def test_margin_sign(self):
        assert criterion_margin(Criterion.DUAN_QT, 1.0, 0, 0) == pytest.approx(math.exp(-2.0) - 1.0)

    def test_non_monotone_margin_is_rejected(self, monkeypatch):
        def wiggly(criterion, r, nA, nB):
            return math.cos(3.0 * r), 1.0

        monkeypatch.setattr(thresholds, "_margin_and_scale", wiggly)
        with pytest.raises(OracleError):
            bisection_threshold(0, 0, Criterion.ENT_PPT)

    def test_bad_r_max(self):
        with pytest.raises(DomainError):
            bisection_threshold(0, 0, Criterion.ENT_PPT, r_max=0.0)

    @pytest.mark.parametrize("criterion", list(Criterion))
    def test_agrees_with_closed_form_on_coarse_grid(self, criterion):
        for nA in np.linspace(0, 3, 4):
            for nB in np.linspace(0, 3, 4):
                want = closed_form_thresholds(nA, nB).for_criterion(criterion)
                assert bisection_threshold(nA, nB, criterion) == pytest.approx(want, abs=1e-8)
