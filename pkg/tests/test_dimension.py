import numpy as np
import pytest

from capmotion import (CapacitySign, DimensionDomain, astala_dimension,
                       capacity_sign_from_dimension, critical_lambda,
                       critical_lambda_closed_form, dimension_sweep,
                       nonharmonicity_witness)


class TestDimensionFormula:
    def test_value_at_zero_is_t(self):
        for t in (0.1, 0.5, 1.3, 1.9):
            assert astala_dimension(t, 0.0) == pytest.approx(t, abs=1e-15)

    def test_half_half_crosses_one(self):
        # 2*0.5 / (0.5 + 1.5*(0.5/1.5)) = 1
        assert astala_dimension(0.5, 0.5) == pytest.approx(1.0, abs=1e-15)

    def test_approaches_two(self):
        vals = [astala_dimension(1.5, lam) for lam in (0.9, 0.99, 0.999)]
        assert vals == sorted(vals)
        assert vals[-1] > 1.99

    def test_strictly_increasing_in_lambda(self):
        rng = np.random.default_rng(0)
        for _ in range(1000):
            t = 0.01 + 1.98 * rng.random()
            l1, l2 = np.sort(0.999 * rng.random(2))
            if l1 == l2:
                continue
            assert astala_dimension(t, l1) < astala_dimension(t, l2)

    def test_domain_errors(self):
        with pytest.raises(DimensionDomain):
            astala_dimension(0.5, 1.0)
        with pytest.raises(DimensionDomain):
            astala_dimension(2.0, 0.5)
        with pytest.raises(DimensionDomain):
            astala_dimension(0.0, 0.5)


class TestCapacitySign:
    def test_classification(self):
        assert capacity_sign_from_dimension(0.7) is CapacitySign.ZERO
        assert capacity_sign_from_dimension(1.3) is CapacitySign.POSITIVE
        assert capacity_sign_from_dimension(1.0) is CapacitySign.UNKNOWN

    def test_domain(self):
        with pytest.raises(DimensionDomain):
            capacity_sign_from_dimension(2.5)


class TestCriticalLambda:
    @pytest.mark.parametrize("t", [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9])
    def test_bisection_matches_closed_form(self, t):
        delta = critical_lambda(t)
        assert abs(delta - critical_lambda_closed_form(t)) < 1e-12
        assert abs(astala_dimension(t, delta) - 1.0) < 1e-12

    def test_known_values(self):
        assert critical_lambda(0.5) == pytest.approx(0.5, abs=1e-12)
        assert critical_lambda(0.9) == pytest.approx(0.1, abs=1e-12)

    def test_threshold_vanishes_as_t_approaches_one(self):
        assert critical_lambda(1.0 - 1e-6) < 2e-6

    def test_domain(self):
        with pytest.raises(DimensionDomain):
            critical_lambda(1.5)


class TestSweep:
    def test_signs_follow_threshold(self):
        prof = dimension_sweep(0.5, np.linspace(0.0, 0.9, 10))
        for lam, sign in zip(prof.lambdas, prof.signs):
            if lam < prof.delta - 1e-9:
                assert sign is CapacitySign.ZERO
            elif lam > prof.delta + 1e-9:
                assert sign is CapacitySign.POSITIVE

    def test_dims_increasing(self):
        prof = dimension_sweep(0.7, np.linspace(0.0, 0.9, 20))
        assert np.all(np.diff(prof.dims) > 0)


class TestWitness:
    def test_half_certificate(self):
        cert = nonharmonicity_witness(0.5, sample_count=5)
        assert cert.delta == pytest.approx(0.5, abs=1e-12)
        assert [lam for lam, _, _ in cert.zero_samples] == pytest.approx(
            [0.0, 0.125, 0.25, 0.375], abs=1e-9)
        assert [lam for lam, _, _ in cert.positive_samples] == pytest.approx(
            [0.625, 0.75, 0.875], abs=1e-9)
        assert len(cert.rules) == 4
        assert all(r.consumes for r in cert.rules)
        assert len(cert.conclusions) == 2

    def test_samples_straddle_threshold(self):
        cert = nonharmonicity_witness(0.3, sample_count=7)
        delta = cert.delta
        assert all(lam < delta for lam, _, _ in cert.zero_samples)
        assert all(delta < lam < 1.0 for lam, _, _ in cert.positive_samples)
        assert all(s is CapacitySign.ZERO for _, _, s in cert.zero_samples)
        assert all(s is CapacitySign.POSITIVE for _, _, s in cert.positive_samples)

    def test_t_point_nine(self):
        cert = nonharmonicity_witness(0.9)
        assert cert.delta == pytest.approx(0.1, abs=1e-12)

    def test_rejects_large_t(self):
        with pytest.raises(DimensionDomain):
            nonharmonicity_witness(1.5)

    def test_render_mentions_all_rules(self):
        text = nonharmonicity_witness(0.5).render()
        for name in ("dimension-capacity-dichotomy",
                     "superharmonic-functions-are-finite-below",
                     "subharmonic-minus-infinity-propagation",
                     "superharmonic-minimum-principle"):
            assert name in text
