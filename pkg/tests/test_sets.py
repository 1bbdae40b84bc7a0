import numpy as np
import pytest

from capmotion import (Disk, Ellipse, FinitePointCloud, OptimizerBudgetExceeded,
                       Segment, UnsupportedSet, analytic_capacity, is_connected,
                       support_radius, transfinite_diameter)


class TestClosedForms:
    def test_unit_disk(self):
        assert analytic_capacity(Disk(0j, 1.0)) == 1.0

    def test_segment_length_over_four(self):
        assert analytic_capacity(Segment(0j, 4 + 0j)) == pytest.approx(1.0)

    def test_ellipse_mean_of_semiaxes(self):
        assert analytic_capacity(Ellipse(0j, 1.5, 0.5)) == pytest.approx(1.0)

    def test_point_cloud_rejected(self):
        with pytest.raises(UnsupportedSet):
            analytic_capacity(FinitePointCloud((0j, 1 + 0j)))

    @pytest.mark.parametrize("c,b", [(2.0, 0j), (0.5, 3 - 1j), (1.0, -2j)])
    def test_scaling_and_translation(self, c, b):
        # gamma(c K + b) = |c| gamma(K) for every parametric family
        assert analytic_capacity(Disk(b, c * 1.0)) == pytest.approx(
            c * analytic_capacity(Disk(0j, 1.0)))
        seg = Segment(1j, 3 + 0j)
        moved = Segment(c * 1j + b, c * (3 + 0j) + b)
        assert analytic_capacity(moved) == pytest.approx(c * analytic_capacity(seg))
        ell = Ellipse(0j, 1.5, 0.5)
        scaled = Ellipse(b, c * 1.5, c * 0.5)
        assert analytic_capacity(scaled) == pytest.approx(c * analytic_capacity(ell))


class TestSupportRadius:
    def test_centered_disk(self):
        assert support_radius(Disk(0j, 1.0)) == 1.0

    def test_offset_disk(self):
        assert support_radius(Disk(3 + 0j, 1.0)) == 4.0

    def test_segment_endpoints(self):
        assert support_radius(Segment(-2 + 0j, 2j)) == 2.0

    def test_centered_ellipse_is_semi_major(self):
        assert support_radius(Ellipse(0j, 1.5, 0.5, rotation=0.7)) == pytest.approx(1.5)

    def test_offset_ellipse(self):
        r = support_radius(Ellipse(2 + 0j, 1.5, 0.5))
        assert r == pytest.approx(3.5, abs=1e-10)

    def test_point_cloud(self):
        assert support_radius(FinitePointCloud((1j, -3 + 0j))) == 3.0


class TestInvariants:
    def test_validation(self):
        with pytest.raises(ValueError):
            Disk(0j, -1.0)
        with pytest.raises(ValueError):
            Segment(1j, 1j)
        with pytest.raises(ValueError):
            Ellipse(0j, 0.5, 1.5)

    def test_connectivity(self):
        assert is_connected(Disk(0j, 1.0))
        assert is_connected(Segment(0j, 1 + 0j))
        assert is_connected(FinitePointCloud((1j,)))
        assert not is_connected(FinitePointCloud((0j, 1 + 0j)))


class TestTransfiniteDiameter:
    def test_disk_two_points_is_diameter(self):
        assert transfinite_diameter(Disk(0j, 1.0), 2, 4) == pytest.approx(2.0)

    def test_disk_equispaced_value(self):
        # the optimum on the circle is n equispaced points: d_n = n^(1/(n-1))
        d = transfinite_diameter(Disk(0j, 1.0), 32, 8)
        assert d == pytest.approx(32.0 ** (1.0 / 31.0), rel=1e-9)
        assert 1.0 <= d <= 1.2

    @pytest.mark.parametrize("cset", [Disk(0j, 1.0), Segment(0j, 4 + 0j),
                                      Ellipse(0j, 1.5, 0.5)])
    def test_monotone_and_above_capacity(self, cset):
        values = [transfinite_diameter(cset, n, 8) for n in (2, 4, 8, 16, 32)]
        for a, b in zip(values, values[1:]):
            assert b <= a + 1e-9
        cap = analytic_capacity(cset)
        assert cap <= values[-1] <= 1.2 * cap

    def test_segment_decreases_toward_capacity(self):
        d16 = transfinite_diameter(Segment(0j, 4 + 0j), 16, 8)
        d32 = transfinite_diameter(Segment(0j, 4 + 0j), 32, 8)
        assert d32 <= d16
        assert d16 >= 1.0

    def test_budget_errors(self):
        with pytest.raises(OptimizerBudgetExceeded):
            transfinite_diameter(Disk(0j, 1.0), 8, 0)

    def test_no_sampler(self):
        with pytest.raises(UnsupportedSet):
            transfinite_diameter(FinitePointCloud((0j, 1 + 0j)), 4, 4)

    def test_seeded_determinism(self):
        a = transfinite_diameter(Ellipse(0j, 1.5, 0.5), 8, 8, seed=42)
        b = transfinite_diameter(Ellipse(0j, 1.5, 0.5), 8, 8, seed=42)
        assert a == b
