"""Signal catalog: evaluation, envelopes, closed forms, region errors."""

import json
import math

import numpy as np
import pytest

from bcft.bicomplex import Bicomplex, from_units
from bcft.signals import (
    OutsideRegionError,
    SingularFrequencyError,
    catalog,
    catalog_json,
    closed_form_transform,
    damped_osc,
    gaussian,
    make,
    one_sided_exp,
    rect,
    two_sided_exp,
)

ROOT_2PI = math.sqrt(2 * math.pi)


class TestEvaluation:
    def test_two_sided_at_zero(self):
        assert two_sided_exp(1).eval(0) == 1.0

    def test_rect_outside_support(self):
        assert rect(1).eval(1.5) == 0.0
        assert rect(1).eval(1.0) == 1.0

    def test_damped_quarter_period(self):
        # e^{-pi/4} * sin(pi/2)
        got = damped_osc(1, 2).eval(math.pi / 4)
        assert got == pytest.approx(math.exp(-math.pi / 4), abs=1e-15)

    def test_one_sided_vanishes_left(self):
        s = one_sided_exp()
        assert s.eval(0.0) == 0.0
        assert s.eval(-3.0) == 0.0
        assert s.eval(2.0) == pytest.approx(math.exp(-2))

    def test_no_overflow_far_left(self):
        # branch-safe evaluation: exp(-t) at t=-800 must not be computed
        for s in (one_sided_exp(), damped_osc(2, 3)):
            assert s.eval(-800.0) == 0.0
            assert np.all(s.eval(np.array([-800.0, -1e6])) == 0.0)

    def test_array_eval(self):
        t = np.linspace(-2, 2, 7)
        out = two_sided_exp(2).eval(t)
        np.testing.assert_allclose(out, np.exp(-2 * np.abs(t)))

    def test_support_means_zero_outside(self):
        s = rect(0.5)
        t = np.array([-10.0, -0.5001, 0.5001, 3.0])
        assert np.all(s.eval(t) == 0.0)


class TestParameters:
    @pytest.mark.parametrize("bad", [0.0, -1.0, math.nan, math.inf])
    def test_invalid_rates_rejected(self, bad):
        with pytest.raises(ValueError):
            two_sided_exp(bad)
        with pytest.raises(ValueError):
            rect(bad)
        with pytest.raises(ValueError):
            damped_osc(T=bad)

    def test_make_dispatch(self):
        s = make("rect", a=2.0)
        assert s.params == {"a": 2.0}
        assert s.support == (-2.0, 2.0)
        with pytest.raises(ValueError, match="unknown signal"):
            make("nosuch")

    def test_catalog_lists_five(self):
        names = [s.name for s in catalog()]
        assert names == ["two_sided_exp", "one_sided_exp", "gaussian", "rect", "damped_osc"]

    def test_catalog_json(self):
        entries = json.loads(catalog_json())
        assert len(entries) == 5
        by_name = {e["name"]: e for e in entries}
        assert all(e["has_closed_form"] for e in entries)
        assert by_name["rect"]["support"] == [-1, 1]
        assert by_name["gaussian"]["support"] is None
        assert by_name["damped_osc"]["parameters"] == {"T": 1.0, "omega0": 1.0}


class TestEnvelopes:
    @pytest.mark.parametrize("spec", catalog(), ids=lambda s: s.name)
    def test_envelope_soundness(self, spec):
        e = spec.envelope
        t_right = np.linspace(0, 40, 1000)
        t_left = np.linspace(-40, 0, 1000)
        assert np.all(np.abs(spec.eval(t_right)) <= e.C1 * np.exp(-e.alpha * t_right) + 1e-12)
        assert np.all(np.abs(spec.eval(t_left)) <= e.C2 * np.exp(e.beta * t_left) + 1e-12)

    def test_derivative_envelopes_sound(self):
        specs = [two_sided_exp(1.5).derivatives[1], gaussian().derivatives[1], gaussian().derivatives[2]]
        t = np.linspace(-30, 30, 2000)
        for spec in specs:
            e = spec.envelope
            bound = np.where(t >= 0, e.C1 * np.exp(-e.alpha * t), e.C2 * np.exp(e.beta * t))
            assert np.all(np.abs(spec.eval(t)) <= bound + 1e-12), spec.name

    def test_beta_arbitrary_witness_raised(self):
        s = one_sided_exp()
        assert s.envelope.beta_arbitrary
        assert s.envelope_at(5.0).beta == 6.0
        assert s.envelope_at(0.0).beta == 1.0
        assert s.envelope_at(5.0).alpha == 1.0

    def test_gaussian_adaptive_envelope(self):
        s = gaussian()
        t = np.linspace(-20, 20, 4001)
        for v in (0.0, 2.0, -7.5):
            e = s.envelope_at(v)
            assert e.alpha == abs(v) + 1.0
            assert np.all(np.abs(s.eval(t)) <= e.C1 * np.exp(-e.alpha * np.abs(t)) + 1e-12)

    def test_region_from_envelope(self):
        assert two_sided_exp(2).region.alpha == 2.0
        assert two_sided_exp(2).region.beta == 2.0
        assert math.isinf(one_sided_exp().region.beta)
        assert math.isinf(damped_osc(4).region.beta)
        assert damped_osc(4).region.alpha == 0.25


class TestClosedForms:
    def test_two_sided_at_zero(self):
        assert closed_form_transform(two_sided_exp(1), Bicomplex()) == from_units(2, 0, 0, 0)

    def test_gaussian_at_zero(self):
        got = closed_form_transform(gaussian(), Bicomplex())
        assert got.a0 == pytest.approx(2.5066282746310002, abs=1e-15)
        assert (got.a1, got.a2, got.a3) == (0, 0, 0)

    def test_two_sided_on_imaginary_axis(self):
        # components both 0.5j, so 2/(1 + (0.5j)^2) = 8/3
        got = closed_form_transform(two_sided_exp(1), from_units(0, 0.5, 0, 0))
        assert got.a0 == pytest.approx(8 / 3, abs=1e-14)

    def test_one_sided_at_zero(self):
        assert closed_form_transform(one_sided_exp(), Bicomplex()) == from_units(1, 0, 0, 0)

    def test_rect_at_zero(self):
        assert closed_form_transform(rect(1), Bicomplex()) == from_units(2, 0, 0, 0)

    @pytest.mark.parametrize(
        "T,omega0,wk,expected",
        [
            (1, 1, 0j, 0.5 + 0j),
            (1, 2, 0j, 0.4 + 0j),
            (0.5, 3, 0j, 3 / 13 + 0j),
            (1, 1, 1 + 0.3j, 0.1757469244288225 + 0.27037988373665j),
            (1, 2, 1 + 0.3j, 0.3261916602042697 + 0.1808311975546058j),
            (0.5, 3, 2.3 - 0.4j, 0.2012141309870832 + 0.2361939400422539j),
        ],
    )
    def test_damped_scalar_values(self, T, omega0, wk, expected):
        got = damped_osc(T, omega0).closed_form(wk)
        assert got == pytest.approx(expected, abs=1e-15)

    def test_componentwise_construction(self):
        rng = np.random.default_rng(23)
        for spec in (two_sided_exp(1), gaussian(), rect(2)):
            for _ in range(25):
                w = from_units(*rng.uniform(-0.4, 0.4, 4))
                full = closed_form_transform(spec, w)
                for k, wk in enumerate(w.pair):
                    scalar = spec.closed_form(wk)
                    assert abs(full.pair[k] - scalar) <= 1e-14 * max(1, abs(scalar))

    def test_rect_series_branch_agreement(self):
        cf = rect(1).closed_form
        for angle in np.linspace(0, 2 * math.pi, 9):
            z = 1e-4 * complex(math.cos(angle), math.sin(angle))
            direct = 2 * np.sin(z) / z
            assert abs(cf(z) - direct) <= 1e-12 * abs(direct)

    def test_rect_far_frequency(self):
        wk = 50j
        assert rect(1).closed_form(wk) == pytest.approx(2 * math.sinh(50) / 50, rel=1e-15)


class TestRegionErrors:
    def test_outside_strip(self):
        with pytest.raises(OutsideRegionError) as err:
            closed_form_transform(two_sided_exp(1), from_units(0, 2, 0, 0))
        assert err.value.margin == pytest.approx(-1.0)
        assert err.value.component in (1, 2)

    def test_component_identified(self):
        # a1=0.5, a2=0.6: component 1 has Im = -0.1 (fine), component 2 Im = 1.1
        with pytest.raises(OutsideRegionError) as err:
            closed_form_transform(two_sided_exp(1), from_units(0, 0.5, 0.6, 0))
        assert err.value.component == 2

    def test_entire_signals_never_region_error(self):
        closed_form_transform(gaussian(), from_units(3, 5, 1, 2))
        closed_form_transform(rect(1), from_units(0, 40, 10, 5))

    def test_damped_pole_is_singular(self):
        s = damped_osc(1, 1)
        near_pole = 1 + (-1 + 5e-10) * 1j
        assert s.singular_set(near_pole)
        w = Bicomplex.from_i1(near_pole)
        with pytest.raises(SingularFrequencyError):
            closed_form_transform(s, w)

    def test_damped_generic_point_fine(self):
        got = closed_form_transform(damped_osc(1, 1), from_units(1, 0.3, 0, 0))
        assert got.a0 == pytest.approx(0.1757469244288225, abs=1e-15)
        assert got.a1 == pytest.approx(0.27037988373665, abs=1e-15)

    def test_missing_closed_form(self):
        bare = two_sided_exp(1).derivatives[1]
        with pytest.raises(ValueError, match="no closed-form"):
            closed_form_transform(bare, Bicomplex())


class TestDerivatives:
    def test_registry(self):
        assert set(two_sided_exp(1).derivatives) == {1}
        assert set(gaussian().derivatives) == {1, 2}
        assert damped_osc().derivatives == {}

    def test_gaussian_derivative_values(self):
        d1 = gaussian().derivatives[1]
        d2 = gaussian().derivatives[2]
        t = np.linspace(-3, 3, 13)
        np.testing.assert_allclose(d1.eval(t), -t * np.exp(-0.5 * t * t), atol=1e-15)
        np.testing.assert_allclose(d2.eval(t), (t * t - 1) * np.exp(-0.5 * t * t), atol=1e-15)

    def test_two_sided_derivative_values(self):
        d1 = two_sided_exp(2).derivatives[1]
        assert d1.eval(1.0) == pytest.approx(-2 * math.exp(-2))
        assert d1.eval(-1.0) == pytest.approx(2 * math.exp(-2))
        assert d1.eval(0.0) == 0.0
