"""Region-of-convergence predicates and rhombus geometry."""

import math

import numpy as np
import pytest
from shapely.geometry import Point, Polygon

from bcft.bicomplex import from_units
from bcft.roc import ConvergenceRegion, polygon_csv

UNIT = ConvergenceRegion(1.0, 1.0)


class TestValidation:
    @pytest.mark.parametrize("alpha,beta", [(0, 1), (-1, 1), (1, 0), (1, -2), (math.inf, 1), (math.nan, 1), (1, math.nan)])
    def test_rejects_bad_rates(self, alpha, beta):
        with pytest.raises(ValueError):
            ConvergenceRegion(alpha, beta)

    def test_beta_inf_allowed(self):
        ConvergenceRegion(1.0, math.inf)


class TestContains:
    def test_origin_inside(self):
        assert UNIT.contains_units(from_units(0, 0, 0, 0))
        assert UNIT.contains_strips(from_units(0, 0, 0, 0))

    def test_rhombus_edge_excluded(self):
        # a1 < beta - |a2| binds: 0.8 < 0.6 fails
        w = from_units(0, 0.8, 0.4, 0)
        assert not UNIT.contains_units(w)
        assert not UNIT.contains_strips(w)

    def test_near_vertex_inside(self):
        w = from_units(0, 0, 0.999, 0)
        assert UNIT.contains_units(w)
        assert UNIT.contains_strips(w)

    def test_strip_boundary_strict(self):
        eps = 1e-9
        assert UNIT.contains_strips(from_units(0, 1 - eps, 0, 0))
        assert not UNIT.contains_strips(from_units(0, 1.0, 0, 0))
        assert not UNIT.contains_units(from_units(0, 1.0, 0, 0))

    def test_a0_a3_irrelevant(self):
        rng = np.random.default_rng(3)
        for _ in range(200):
            a1, a2 = rng.uniform(-3, 3, 2)
            base = from_units(0, a1, a2, 0)
            shifted = from_units(rng.uniform(-1e6, 1e6), a1, a2, rng.uniform(-1e6, 1e6))
            assert UNIT.contains_units(base) == UNIT.contains_units(shifted)
            assert UNIT.contains_strips(base) == UNIT.contains_strips(shifted)


class TestMargin:
    def test_centered(self):
        assert UNIT.margin(from_units(0, 0, 0, 0)) == 1.0

    def test_halfway_up(self):
        assert UNIT.margin(from_units(0, 0.5, 0, 0)) == 0.5

    def test_outside_is_negative(self):
        assert UNIT.margin(from_units(0, 2, 0, 0)) == -1.0

    def test_sign_matches_predicate(self):
        rng = np.random.default_rng(11)
        region = ConvergenceRegion(0.5, 2.0)
        for _ in range(2000):
            w = from_units(*rng.uniform(-5, 5, 4))
            m = region.margin(w)
            if abs(m) <= 1e-12:
                continue
            assert (m > 0) == region.contains_strips(w)


class TestEquivalence:
    @pytest.mark.parametrize("alpha,beta", [(1, 1), (1, 3), (0.5, 2)])
    def test_units_equals_strips(self, alpha, beta):
        region = ConvergenceRegion(alpha, beta)
        rng = np.random.default_rng(29)
        lim = 2 * (alpha + beta)
        coeffs = rng.uniform(-lim, lim, size=(100_000, 4))
        np.testing.assert_array_equal(region.units_mask(coeffs), region.strips_mask(coeffs))

    def test_masks_match_scalar_predicates(self):
        region = ConvergenceRegion(1.0, 3.0)
        rng = np.random.default_rng(5)
        coeffs = rng.uniform(-8, 8, size=(500, 4))
        units = region.units_mask(coeffs)
        strips = region.strips_mask(coeffs)
        for row, mu, ms in zip(coeffs, units, strips):
            w = from_units(*row)
            assert region.contains_units(w) == bool(mu)
            assert region.contains_strips(w) == bool(ms)


class TestPolygon:
    def test_unit_rhombus(self):
        np.testing.assert_array_equal(
            UNIT.cross_section_polygon(),
            [[-1, 0], [0, -1], [1, 0], [0, 1]],
        )

    def test_asymmetric(self):
        np.testing.assert_array_equal(
            ConvergenceRegion(1, 3).cross_section_polygon(),
            [[-1, 0], [1, -2], [3, 0], [1, 2]],
        )

    @pytest.mark.parametrize("alpha,beta", [(1, 1), (1, 3), (0.5, 2)])
    def test_shoelace_area(self, alpha, beta):
        poly = Polygon(ConvergenceRegion(alpha, beta).cross_section_polygon())
        assert poly.area == pytest.approx((alpha + beta) ** 2 / 2, rel=1e-14)
        assert poly.exterior.is_ccw

    @pytest.mark.parametrize("alpha,beta", [(1, 1), (0.5, 2)])
    def test_interior_matches_predicate(self, alpha, beta):
        region = ConvergenceRegion(alpha, beta)
        poly = Polygon(region.cross_section_polygon())
        rng = np.random.default_rng(17)
        lim = alpha + beta
        checked = 0
        for _ in range(10_000):
            a1, a2 = rng.uniform(-lim, lim, 2)
            pt = Point(a1, a2)
            if poly.exterior.distance(pt) < 1e-9:
                continue  # too close to call either way
            assert poly.contains(pt) == region.contains_units(from_units(0, a1, a2, 0))
            checked += 1
        assert checked > 9000

    def test_inf_beta_has_no_polygon(self):
        with pytest.raises(ValueError):
            ConvergenceRegion(1, math.inf).cross_section_polygon()


class TestInfiniteBeta:
    def test_upper_halfplane_open_below(self):
        region = ConvergenceRegion(1, math.inf)
        assert region.contains_units(from_units(0, 1e9, 0, 0))
        assert region.contains_strips(from_units(0, 1e9, 0, 0))
        assert not region.contains_units(from_units(0, -1.5, 0, 0))
        assert region.margin(from_units(0, 5, 0, 0)) == 6.0

    def test_lower_bound_keeps_a2_correction(self):
        region = ConvergenceRegion(1, math.inf)
        assert not region.contains_units(from_units(0, -0.5, 0.8, 0))
        assert region.contains_units(from_units(0, -0.5, 0.3, 0))


class TestCsv:
    def test_header_and_rows(self):
        text = polygon_csv(UNIT)
        assert text.splitlines() == ["a1,a2", "-1,0", "0,-1", "1,0", "0,1"]

    def test_fractional_vertices(self):
        text = polygon_csv(ConvergenceRegion(0.5, 2))
        assert text.splitlines()[1] == "-0.5,0"
        assert text.splitlines()[2] == "0.75,-1.25"
