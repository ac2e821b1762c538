"""Sphere and projective-space eigenfunctions via ambient coordinates."""

import numpy as np
import pytest
from numpy.testing import assert_allclose

from eigenlab.ambient import (AmbientField, check_circle_invariant,
                              check_homogeneous, cpn_ops, cpn_phi,
                              random_sphere_point, rotate_field, sphere_ops,
                              sphere_phi)
from eigenlab.jets import Jet2


class TestFields:
    def test_sphere_phi_value(self):
        f = sphere_phi(2, 1)
        z = np.array([3.0, 4.0j])  # |z| = 5
        assert_allclose(f.value(z), 0.6, atol=1e-15)

    def test_cpn_phi_value(self):
        f = cpn_phi(1, 1, 2)
        z = np.array([1.0, 1.0j])
        assert_allclose(f.value(z), (1.0 * (-1.0j)) / 2.0, atol=1e-15)

    def test_index_validation(self):
        with pytest.raises(ValueError):
            sphere_phi(2, 3)
        with pytest.raises(ValueError):
            cpn_phi(1, 3, 1)

    def test_homogeneity_check_passes(self):
        rng = np.random.default_rng(0)
        z = random_sphere_point(3, rng)
        check_homogeneous(sphere_phi(3, 2), z)

    def test_homogeneity_check_rejects(self):
        bad = AmbientField(lambda zs: zs[0], 2)  # degree 1
        rng = np.random.default_rng(1)
        z = random_sphere_point(2, rng)
        with pytest.raises(ValueError):
            check_homogeneous(bad, z)

    def test_circle_invariance(self):
        rng = np.random.default_rng(2)
        z = random_sphere_point(2, rng)
        check_circle_invariant(cpn_phi(1, 1, 2), z)
        # z_j / |z| picks up the phase, so it must be rejected
        with pytest.raises(ValueError):
            check_circle_invariant(sphere_phi(2, 1), z)


class TestOffSpherePolicy:
    def test_on_sphere_accepted(self):
        f = sphere_phi(2, 1)
        rng = np.random.default_rng(3)
        z = random_sphere_point(2, rng)
        sphere_ops(f, z)  # no warning, no error

    def test_near_sphere_warns_and_normalizes(self):
        f = sphere_phi(2, 1)
        rng = np.random.default_rng(4)
        z = random_sphere_point(2, rng) * (1 + 5e-7)
        with pytest.warns(UserWarning):
            t1, k1 = sphere_ops(f, z)
        t2, k2 = sphere_ops(f, z / np.linalg.norm(z))
        assert abs(t1 - t2) < 1e-12

    def test_far_from_sphere_rejected(self):
        f = sphere_phi(2, 1)
        with pytest.raises(ValueError):
            sphere_ops(f, np.array([2.0, 0.0]))


class TestSphereEigenvalues:
    @pytest.mark.parametrize("n", [2, 3])
    def test_tension(self, n):
        rng = np.random.default_rng(5)
        lam = -(2 * n - 1)
        for j in range(1, n + 1):
            f = sphere_phi(n, j)
            for _ in range(10):
                z = random_sphere_point(n, rng)
                tau, _ = sphere_ops(f, z)
                v = f.value(z)
                assert abs(tau - lam * v) <= 1e-8 * max(1, abs(v))

    def test_conformality(self):
        n = 2
        rng = np.random.default_rng(6)
        f, g = sphere_phi(n, 1), sphere_phi(n, 2)
        for _ in range(10):
            z = random_sphere_point(n, rng)
            _, kap = sphere_ops(f, z, g)
            prod = f.value(z) * g.value(z)
            assert abs(kap + prod) <= 1e-8 * max(1, abs(prod))

    def test_radial_derivative_vanishes(self):
        # degree-0 extension: the radial direction contributes nothing
        n = 3
        rng = np.random.default_rng(7)
        f = sphere_phi(n, 1)
        z = random_sphere_point(n, rng)
        radial = tuple(Jet2(z[i], z[i], 0.0) for i in range(n))
        jet = f.evaluator(radial)
        assert abs(jet.d1) < 1e-10
        assert abs(jet.d2) < 1e-10

    def test_rotation_invariance(self):
        # the operators commute with ambient unitary rotations
        n = 3
        rng = np.random.default_rng(8)
        f = sphere_phi(n, 2)
        U, _ = np.linalg.qr(rng.standard_normal((n, n))
                            + 1j * rng.standard_normal((n, n)))
        g = rotate_field(f, U)
        for _ in range(5):
            x = random_sphere_point(n, rng)
            assert abs(g.value(U @ x) - f.value(x)) < 1e-12
            t1, k1 = sphere_ops(f, x)
            t2, k2 = sphere_ops(g, U @ x)
            assert abs(t1 - t2) < 1e-10
            assert abs(k1 - k2) < 1e-10


class TestProjectiveEigenvalues:
    @pytest.mark.parametrize("n", [1, 2])
    def test_tension(self, n):
        rng = np.random.default_rng(9)
        lam = -4 * (n + 1)
        for j in range(1, n + 1):
            for k in range(j + 1, n + 2):
                f = cpn_phi(n, j, k)
                for _ in range(10):
                    z = random_sphere_point(n + 1, rng)
                    tau, _ = cpn_ops(f, z)
                    v = f.value(z)
                    assert abs(tau - lam * v) <= 1e-8 * max(1, abs(v))

    def test_conformality(self):
        n = 2
        rng = np.random.default_rng(10)
        f, g = cpn_phi(n, 1, 2), cpn_phi(n, 1, 3)
        for _ in range(10):
            z = random_sphere_point(n + 1, rng)
            _, kap = cpn_ops(f, z, g)
            prod = f.value(z) * g.value(z)
            assert abs(kap + 4 * prod) <= 1e-8 * max(1, abs(prod))

    @pytest.mark.parametrize("n", [1, 2])
    def test_ambient_laplacian_cross_check(self, n):
        # Delta_{R^{2n+2}} (z_j conj(z_k) |z|^-2) = -2(2n+2) z_j conj(z_k)
        # at |z| = 1; the full ambient Laplacian, no fiber subtraction.
        rng = np.random.default_rng(11)
        f = cpn_phi(n, 1, 2)
        for _ in range(5):
            z = random_sphere_point(n + 1, rng)
            tau, _ = sphere_ops(f, z)
            expect = -2 * (2 * n + 2) * (z[0] * np.conj(z[1]))
            assert abs(tau - expect) <= 1e-10 * max(1, abs(expect))


class TestConstants:
    def test_constant_field(self):
        one = AmbientField(lambda zs: Jet2.constant(1.0), 2)
        rng = np.random.default_rng(12)
        z = random_sphere_point(2, rng)
        tau, kap = sphere_ops(one, z)
        assert tau == 0 and kap == 0
        tau, kap = cpn_ops(one, z)
        assert tau == 0 and kap == 0
