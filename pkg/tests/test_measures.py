import math

import numpy as np
import pytest
from hypothesis import assume, given, settings

from conftest import VACUUM, random_sts, sts_params
from oracles import golden_min_gain, mp_f, mp_measures
from dircorr import kernels
from dircorr.errors import DomainError, FormError, ProductStateError
from dircorr.gaussian_core import CovarianceMatrix, StsParams, sts_covariance, sts_entries
from dircorr.measures import (
    Direction,
    correlation_report,
    discord,
    duan,
    ent_gain,
    ent_ppt,
    entropy_f,
    optimal_gain_sym,
    steering,
)

NON_STS = CovarianceMatrix(2.0, 3.0, 1.0, -0.5)


class TestEntropy:
    def test_limit_at_one(self):
        assert entropy_f(1.0) == 0.0
        assert entropy_f(1.0 - 5e-10) == 0.0

    def test_below_one_is_an_error(self):
        with pytest.raises(DomainError):
            entropy_f(1.0 - 1e-8)

    @pytest.mark.parametrize("x", [1.0 + 1e-12, 1.0 + 1e-6, 1.3, 3.0, 57.0, 1e6])
    def test_matches_high_precision(self, x):
        assert entropy_f(x) == pytest.approx(float(mp_f(x)), rel=1e-12, abs=1e-15)


class TestEntPPT:
    def test_vacuum_is_on_the_boundary(self):
        assert ent_ppt(VACUUM) == 0.0

    def test_pure_tmsv(self, tmsv):
        assert ent_ppt(tmsv) == pytest.approx(2 - 2 * math.cosh(2.4), rel=1e-12)
        assert ent_ppt(tmsv) == pytest.approx(-9.113894333931014156, rel=1e-12)

    def test_one_way_state_is_entangled(self, one_way_state):
        # r_ent = 0 for nA = 0, so every r > 0 entangles
        assert ent_ppt(one_way_state) < 0
        assert ent_ppt(one_way_state) == pytest.approx(-36.45557733572405662, rel=1e-12)

    def test_requires_sts_form(self):
        with pytest.raises(FormError):
            ent_ppt(NON_STS)


class TestEntGain:
    def test_vacuum_unit_gain(self):
        assert ent_gain(VACUUM, 1.0) == 1.0

    def test_tmsv_unit_gain(self, tmsv):
        assert ent_gain(tmsv, 1.0) == pytest.approx(math.exp(-1.2), rel=1e-13)

    @given(sts_params)
    def test_zero_gain_is_local_variance(self, p):
        cm = sts_covariance(p)
        assert ent_gain(cm, 0.0, Direction.AB) == cm.n >= 1.0
        assert ent_gain(cm, 0.0, "B|A") == cm.m

    def test_non_finite_gain(self, tmsv):
        with pytest.raises(DomainError):
            ent_gain(tmsv, math.nan)


class TestOptimalGainSym:
    def test_symmetric_state_has_unit_gain(self, tmsv):
        assert optimal_gain_sym(tmsv) == pytest.approx(1.0, rel=1e-15)
        cm = sts_covariance(StsParams(0.3, 1.2, 1.2))
        assert optimal_gain_sym(cm) == pytest.approx(1.0, rel=1e-15)

    def test_one_way_state_matches_golden_section(self, one_way_state):
        cm = one_way_state
        g = optimal_gain_sym(cm)
        assert g == pytest.approx(golden_min_gain(cm.n, cm.m, cm.c1), abs=1e-6)
        assert g == pytest.approx(0.72218972074660251702, rel=1e-12)

    @settings(max_examples=200)
    @given(sts_params)
    def test_reciprocal_directions(self, p):
        cm = sts_covariance(p)
        # below this the larger gain overflows
        assume(cm.c1 > 1e-300)
        product = optimal_gain_sym(cm, "A|B") * optimal_gain_sym(cm, "B|A")
        assert product == pytest.approx(1.0, rel=1e-9)

    def test_product_state(self):
        with pytest.raises(ProductStateError):
            optimal_gain_sym(VACUUM)

    def test_optimality_against_random_gains(self):
        rng = np.random.default_rng(5)
        r, a, b = random_sts(200, seed=5)
        for k in range(200):
            cm = sts_covariance(StsParams(r[k] + 1e-3, a[k], b[k]))
            for direction in Direction:
                best = ent_gain(cm, optimal_gain_sym(cm, direction), direction)
                trial = np.array([ent_gain(cm, g, direction) for g in rng.uniform(-5, 5, 100)])
                assert np.all(best <= trial + 1e-12)


class TestDuan:
    def test_vacuum(self):
        assert duan(VACUUM) == 1.0

    @pytest.mark.parametrize("r", [0.0, 0.1, 0.6, 1.5, 2.0])
    def test_pure_tmsv(self, r):
        assert duan(sts_covariance(StsParams(r, 0, 0))) == pytest.approx(math.exp(-2 * r), rel=1e-12)

    @given(sts_params)
    def test_equals_unit_gain(self, p):
        cm = sts_covariance(p)
        assert duan(cm) == pytest.approx(ent_gain(cm, 1.0), rel=1e-12)


class TestSteering:
    def test_one_way_state(self, one_way_state):
        e_ab = steering(one_way_state, "A|B")
        e_ba = steering(one_way_state, "B|A")
        assert e_ab.value == pytest.approx(0.64916641892107097292, rel=1e-12)
        assert e_ba.value == pytest.approx(1.14446543958315499974, rel=1e-12)
        assert e_ab.value < 1 < e_ba.value
        assert e_ab.gain == one_way_state.c1 / one_way_state.m
        assert e_ba.gain == one_way_state.c1 / one_way_state.n

    def test_pure_tmsv(self, tmsv):
        assert steering(tmsv).value == pytest.approx(1 / math.cosh(1.2), rel=1e-13)
        assert steering(tmsv).value == pytest.approx(0.55228615427820474759, rel=1e-13)

    @given(sts_params)
    def test_unit_gain_is_twice_duan(self, p):
        cm = sts_covariance(p)
        assert steering(cm, "A|B", 1.0).value == pytest.approx(2 * duan(cm), rel=1e-12, abs=1e-12)
        assert steering(cm, "B|A", 1.0).value == pytest.approx(2 * duan(cm), rel=1e-12, abs=1e-12)

    def test_optimum_beats_random_gains(self):
        rng = np.random.default_rng(9)
        r, a, b = random_sts(300, seed=9)
        for k in range(300):
            cm = sts_covariance(StsParams(r[k], a[k], b[k]))
            for direction in Direction:
                best = steering(cm, direction).value
                for g in rng.uniform(-4, 4, 20):
                    assert best <= steering(cm, direction, g).value + 1e-12

    def test_requires_sts_form(self):
        with pytest.raises(FormError):
            steering(NON_STS)


class TestDiscord:
    def test_vacuum(self):
        d = discord(VACUUM)
        assert d == (0.0, 0.0, 0.0)

    @pytest.mark.parametrize("r", [0.05, 0.6, 1.3, 2.0])
    def test_pure_tmsv_is_entanglement_entropy(self, r):
        cm = sts_covariance(StsParams(r, 0, 0))
        # z = (x + x^2 - (x^2 - 1)) / (x + 1) = 1 exactly
        z = (cm.n + cm.m * cm.n - cm.c1**2) / (cm.m + 1)
        assert z == pytest.approx(1.0, abs=1e-12)
        expected = float(mp_f(math.cosh(2 * r)))
        for direction in Direction:
            assert discord(cm, direction).value == pytest.approx(expected, abs=1e-10)

    def test_one_way_state(self, one_way_state):
        ref = mp_measures(0.6, 0, 1)
        assert discord(one_way_state, "A|B").value == pytest.approx(float(ref["d_ab"]), rel=1e-11)
        assert discord(one_way_state, "B|A").value == pytest.approx(float(ref["d_ba"]), rel=1e-11)

    def test_terms_recombine(self, one_way_state):
        d = discord(one_way_state)
        assert d.value == d.h_cond - d.s_cond

    @settings(max_examples=200)
    @given(sts_params)
    def test_non_negative_and_zero_only_for_product(self, p):
        cm = sts_covariance(p)
        d_ab, d_ba = discord(cm, "A|B").value, discord(cm, "B|A").value
        if cm.c1 == 0.0:
            assert d_ab == 0.0 and d_ba == 0.0
        else:
            assert d_ab >= -1e-12 and d_ba >= -1e-12

    def test_strictly_positive_off_product(self):
        for p in [StsParams(0.05, 2, 0.1), StsParams(0.2, 3, 3), StsParams(1.0, 0, 3)]:
            cm = sts_covariance(p)
            assert discord(cm, "A|B").value > 0 and discord(cm, "B|A").value > 0

    def test_unphysical_input_raises(self):
        with pytest.raises(DomainError):
            discord(CovarianceMatrix(0.5, 0.5, 0.1, -0.1))


class TestReport:
    def test_fields(self, one_way_state):
        rep = correlation_report(one_way_state)
        assert rep.g_ab_opt == pytest.approx(one_way_state.c1 / one_way_state.m)
        assert rep.g_sym_ab * rep.g_sym_ba == pytest.approx(1.0, rel=1e-12)
        assert rep.d_ab == pytest.approx(rep.h_cond_ab - rep.s_cond_ab)
        assert set(rep.to_dict()) >= {"ent_ppt", "duan", "e_ab", "e_ba", "d_ab", "d_ba"}

    def test_product_state_has_no_gain(self):
        rep = correlation_report(VACUUM)
        assert rep.g_sym_ab is None and rep.d_ab == 0.0

    @settings(max_examples=200)
    @given(sts_params)
    def test_exchange_symmetry_is_exact(self, p):
        a = correlation_report(sts_covariance(p))
        b = correlation_report(sts_covariance(p.swapped()))
        assert (a.e_ab, a.d_ab, a.s_cond_ab, a.h_cond_ab) == (b.e_ba, b.d_ba, b.s_cond_ba, b.h_cond_ba)
        assert (a.e_ba, a.d_ba) == (b.e_ab, b.d_ab)
        assert a.ent_ppt == b.ent_ppt and a.duan == b.duan


class TestEquivalence:
    def test_three_entanglement_tests_agree(self):
        """PPT sign, gain form at g_sym and d~- < 1 agree off the boundary band."""
        r, a, b = random_sts(10_000, seed=21)
        n, m, c = sts_entries(r, a, b)
        f = kernels.evaluate(n, m, c)
        margins = {
            "ppt": f["ent_ppt"],
            "gain_ab": f["ent_gain_sym_ab"] - 1.0,
            "gain_ba": f["ent_gain_sym_ba"] - 1.0,
            "pt": f["d_minus_pt"] - 1.0,
        }
        clear = np.all([np.abs(v) >= 1e-9 for v in margins.values()], axis=0)
        signs = np.array([v[clear] < 0 for v in margins.values()])
        assert clear.sum() > 9_900
        assert np.all(signs == signs[0])

    def test_scalar_route_agrees(self):
        r, a, b = random_sts(500, seed=22)
        for k in range(500):
            cm = sts_covariance(StsParams(r[k], a[k], b[k]))
            ppt = ent_ppt(cm)
            if abs(ppt) < 1e-9 or cm.c1 == 0:
                continue
            gain = ent_gain(cm, optimal_gain_sym(cm))
            assert (ppt < 0) == (gain < 1)


@pytest.mark.parametrize("noise", [(0, 0), (0, 1), (0.3, 0.8), (1, 2)])
def test_discord_grows_as_steering_improves(noise):
    r = np.linspace(0.05, 2.0, 40)
    e = []
    d = []
    for x in r:
        cm = sts_covariance(StsParams(x, *noise))
        e.append(steering(cm).value)
        d.append(discord(cm).value)
    assert np.all(np.diff(e) < -1e-12)
    assert np.all(np.diff(d) > 1e-12)
