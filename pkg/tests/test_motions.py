import numpy as np
import pytest

from capmotion import (CustomMotion, DomainViolation, Identity, Joukowski,
                       OutOfParameterDisk, Rebased, Scaled, ScaleRotate,
                       Translation, mobius_reparam, rebase,
                       verify_motion_axioms)

BUILTINS = [Identity(), Translation(c=1 + 0.5j), ScaleRotate(alpha=1.0),
            Joukowski(c=1.0, exclusion_radius=1.0)]


class TestEvaluate:
    def test_identity(self):
        assert Identity().evaluate(0.5, 2 + 1j) == 2 + 1j

    def test_scale_rotate(self):
        got = ScaleRotate(alpha=1.0).evaluate(0.3, 1.0)
        assert got == pytest.approx(np.exp(0.3))

    def test_joukowski(self):
        assert Joukowski(c=1.0).evaluate(0.5, 1.0) == pytest.approx(1.5)

    def test_parameter_disk_enforced(self):
        with pytest.raises(OutOfParameterDisk):
            Identity().evaluate(0.95, 1.0)

    def test_joukowski_domain_enforced(self):
        with pytest.raises(DomainViolation):
            Joukowski().evaluate(0.1, 0.5)

    @pytest.mark.parametrize("motion", BUILTINS)
    def test_identity_at_zero_exact(self, motion):
        rng = np.random.default_rng(0)
        z = 1.5 + 2.0 * rng.random(100) + 1j * rng.standard_normal(100)
        assert np.all(motion.evaluate(0.0, z) == z)

    @pytest.mark.parametrize("motion", BUILTINS)
    def test_inverse_roundtrip(self, motion):
        rng = np.random.default_rng(1)
        z = (2.0 + rng.random(50)) * np.exp(2j * np.pi * rng.random(50))
        for lam in (0.3, -0.6, 0.2 + 0.4j):
            w = motion.evaluate(lam, z)
            back = motion.invert(lam, w)
            assert np.max(np.abs(back - z)) < 1e-12


class TestJoukowskiInjectivity:
    def test_no_sampled_collisions(self):
        # |c| <= r^2 makes z + lam c/z injective on |z| > r for |lam| < 1
        rng = np.random.default_rng(7)
        m = Joukowski(c=1.0, exclusion_radius=1.0)
        n = 200  # 200 points -> 19900 pairs > 1e4
        z = (1.0 + 1e-6 + 3.0 * rng.random(n)) * np.exp(2j * np.pi * rng.random(n))
        iu, ju = np.triu_indices(n, 1)
        for lam in (0.9, -0.9, 0.6 + 0.6j):
            w = np.asarray(m.evaluate(lam, z))
            assert np.min(np.abs(w[iu] - w[ju])) > 1e-9

    def test_constructor_guards(self):
        with pytest.raises(ValueError):
            Joukowski(c=2.0, exclusion_radius=1.0)


class TestRebase:
    def test_rebase_at_zero_negates_parameter(self):
        m = Translation(c=1.0)
        r = rebase(m, 0.0)
        for lam in (0.1, -0.4, 0.2 + 0.3j):
            assert r.evaluate(lam, 1j) == pytest.approx(m.evaluate(-lam, 1j))

    def test_rebase_identity_at_origin(self):
        r = rebase(ScaleRotate(alpha=0.8), 0.5)
        rng = np.random.default_rng(3)
        z = rng.standard_normal(1000) + 1j * rng.standard_normal(1000)
        assert np.max(np.abs(r.evaluate(0.0, z) - z)) < 1e-12

    def test_translation_hand_composition(self):
        # mu = (0.25-0.1)/(1-0.025) = 0.15/0.975; preimage of 0 is -0.25
        r = rebase(Translation(c=1.0), 0.25)
        got = r.evaluate(0.1, 0.0)
        assert got == pytest.approx(0.15 / 0.975 - 0.25)
        assert got == pytest.approx(-0.0961538461538, abs=1e-12)

    def test_reparam_maps_disk_to_disk(self):
        xs = np.linspace(-0.95, 0.95, 21)
        lam = xs[None, :] + 1j * xs[:, None]
        lam = lam[np.abs(lam) < 1.0]
        for lam0 in (0.0, 0.3, -0.7):
            assert np.all(np.abs(mobius_reparam(lam0, lam)) < 1.0)

    def test_rebased_parameter_cap_shrinks(self):
        r = rebase(ScaleRotate(alpha=1.0), 0.5)
        assert r.rho_max == pytest.approx((0.9 - 0.5) / (1.0 - 0.45))
        with pytest.raises(OutOfParameterDisk):
            r.evaluate(0.8, 1.0)

    def test_lambda0_must_be_admissible(self):
        with pytest.raises(OutOfParameterDisk):
            rebase(Identity(), 0.95)


class TestScaled:
    def test_exponential_factor(self):
        m = Scaled(Identity(), alpha=2.0)
        assert m.evaluate(0.3, 1.0) == pytest.approx(np.exp(0.6))

    def test_inverse(self):
        m = Scaled(Translation(c=1j), alpha=-1.0)
        z = 2 + 3j
        assert m.invert(0.4, m.evaluate(0.4, z)) == pytest.approx(z)


class TestAxiomChecker:
    def test_identity_motion_clean(self):
        rep = verify_motion_axioms(Identity(), 100, seed=0)
        assert rep.identity_at_zero == 0.0
        assert rep.injectivity_violations == []
        assert rep.holomorphy_deviation < 1e-14

    def test_scale_rotate_holomorphy(self):
        rep = verify_motion_axioms(ScaleRotate(alpha=2.0), 200, seed=3)
        assert rep.holomorphy_deviation < 1e-10
        assert not rep.injectivity_violations

    def test_broken_family_flagged(self):
        # z + lam*Re(z) is holomorphic in lam (check passes) but collapses
        # the real axis direction as lam -> -rho_max; a coarse collision
        # tolerance sees the near-collisions at lam = -0.9
        broken = CustomMotion(func=lambda lam, z: z + lam * np.real(z))
        rep = verify_motion_axioms(broken, 200, seed=3, collision_tol=0.3)
        assert rep.holomorphy_deviation < 1e-12
        assert len(rep.injectivity_violations) > 0
        assert rep.injectivity_violations[0][0] == pytest.approx(-0.9)

    def test_modulus_table_populated(self):
        rep = verify_motion_axioms(Joukowski(), 200, seed=5)
        assert rep.joint_continuity_modulus
        assert all(d >= 0 and m >= 0 for d, m in rep.joint_continuity_modulus)
