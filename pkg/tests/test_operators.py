"""Tension and conformality via jets: worked examples, identities, and the
finite-difference cross-check."""

import numpy as np
import pytest
from numpy.testing import assert_allclose

from eigenlab.bases import group_basis
from eigenlab.jets import Jet2
from eigenlab.matrices import basis_Y
from eigenlab.operators import (ScalarField, conformality, direction_derivs,
                                field_value, finite_difference_derivs,
                                quotient_ops, tension)
from eigenlab.pairs import make_pair
from eigenlab.sampling import SampleConfig, random_point, random_pair_point


def entry_field(group, n, i, j):
    """The coordinate function q -> q_ij (0-based indices)."""
    return ScalarField(lambda jm: jm[..., i, j], group, n)


def const_field(group, n, c):
    return ScalarField(lambda jm: Jet2.constant(c), group, n, k_invariant=True)


class TestDirectionDerivs:
    def test_constant(self):
        f = const_field("so", 2, 1.0)
        d1, d2 = direction_derivs(f, np.eye(2), basis_Y(2, 1, 2))
        assert d1 == 0 and d2 == 0

    def test_so2_offdiagonal(self):
        # d/ds of exp(s Y12)_12 at s=0 is (Y12)_12 = 1/sqrt(2);
        # Y12^2 = -I/2 kills the second derivative of the 12 entry.
        f = entry_field("so", 2, 0, 1)
        d1, d2 = direction_derivs(f, np.eye(2), basis_Y(2, 1, 2))
        assert_allclose(d1, 1 / np.sqrt(2), atol=1e-15)
        assert_allclose(d2, 0, atol=1e-15)

    def test_so2_diagonal(self):
        f = entry_field("so", 2, 0, 0)
        d1, d2 = direction_derivs(f, np.eye(2), basis_Y(2, 1, 2))
        assert_allclose(d1, 0, atol=1e-15)
        assert_allclose(d2, -0.5, atol=1e-15)


class TestTension:
    def test_constant_is_harmonic(self):
        B = group_basis("su", 2)
        assert tension(const_field("su", 2, 3 + 1j), np.eye(2), B) == 0

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_so_coordinates(self, n):
        # tau(q_ij) = (q . sum Y^2)_ij = -(n-1)/2 q_ij
        B = group_basis("so", n)
        p = random_point("so", n, SampleConfig(seed=7), 0)
        for i, j in [(0, 0), (0, 1), (n - 1, n - 2)]:
            t = tension(entry_field("so", n, i, j), p, B)
            assert_allclose(t, -(n - 1) / 2 * p[i, j], atol=1e-13)

    @pytest.mark.parametrize("n", [1, 2])
    def test_sp_coordinates(self, n):
        B = group_basis("sp", n)
        p = random_point("sp", n, SampleConfig(seed=7), 0)
        t = tension(entry_field("sp", n, 0, 0), p, B)
        assert_allclose(t, -(2 * n + 1) / 2 * p[0, 0], atol=1e-13)

    def test_leibniz_identity(self):
        # tau(fg) = tau(f) g + 2 kappa(f,g) + f tau(g)
        n = 3
        B = group_basis("su", n)
        f = entry_field("su", n, 0, 1)
        g = entry_field("su", n, 2, 0)
        prod = ScalarField(
            lambda jm: jm[..., 0, 1] * jm[..., 2, 0], "su", n)
        cfg = SampleConfig(seed=8)
        for i in range(5):
            p = random_point("su", n, cfg, i)
            lhs = tension(prod, p, B)
            rhs = (tension(f, p, B) * field_value(g, p)
                   + 2 * conformality(f, g, p, B)
                   + field_value(f, p) * tension(g, p, B))
            assert abs(lhs - rhs) <= 1e-9 * max(1, abs(rhs))


class TestConformality:
    def test_with_constant_vanishes(self):
        B = group_basis("so", 3)
        f = entry_field("so", 3, 0, 1)
        c = const_field("so", 3, 2.0)
        p = random_point("so", 3, SampleConfig(seed=9), 0)
        assert conformality(f, c, p, B) == 0

    def test_symmetric(self):
        B = group_basis("su", 3)
        f = entry_field("su", 3, 0, 1)
        g = entry_field("su", 3, 1, 2)
        cfg = SampleConfig(seed=10)
        for i in range(10):
            p = random_point("su", 3, cfg, i)
            assert abs(conformality(f, g, p, B)
                       - conformality(g, f, p, B)) < 1e-12

    def test_so2_diagonal_square(self):
        B = group_basis("so", 2)
        f = entry_field("so", 2, 0, 0)
        k = conformality(f, f, np.eye(2), B)
        assert_allclose(k, 0, atol=1e-15)  # (I Y12)_11 = 0


class TestFiniteDifferenceOracle:
    @pytest.mark.parametrize("h,rtol", [(1e-4, 1e-5), (1e-5, 1e-4)])
    def test_jets_match_fd(self, h, rtol):
        n = 3
        B = group_basis("su", n)
        f = ScalarField(lambda jm: jm[..., 0, 1] * jm[..., 1, 2].conj(),
                        "su", n)
        cfg = SampleConfig(seed=11)
        p = random_point("su", n, cfg, 0)
        for k in range(min(10, B.dim)):
            d1, d2 = direction_derivs(f, p, B[k])
            f1, f2 = finite_difference_derivs(f, p, B[k], h=h)
            assert abs(d1 - f1) <= rtol * max(1, abs(d1))
            assert abs(d2 - f2) <= rtol * max(1, abs(d2))


class TestQuotientOps:
    def test_constant(self):
        pair = make_pair("u-grassmannian", m=1, n=2)
        f = const_field("u", 3, 5.0)
        horiz, full, kap = quotient_ops(pair, f, np.eye(3))
        assert (horiz, full, kap) == (0, 0, 0)

    def test_invariant_function_agrees(self):
        # psi from the catalog is K-invariant, so vertical derivatives die.
        from eigenlab.catalog import quat_grassmannian_psi
        m, n = 1, 1
        psi = quat_grassmannian_psi(m, n, j=2, alpha=1)
        f = psi.as_field()
        cfg = SampleConfig(seed=12)
        for i in range(5):
            p = random_pair_point(psi.pair, cfg, i)
            horiz, full, kap = quotient_ops(psi.pair, f, p)
            assert abs(horiz - full) <= 1e-9 * max(1, abs(full))

    def test_noninvariant_function_detected(self):
        # q_11 on SO(m+n) is not K-invariant; needs dim k > 0 for the
        # vertical sum to be nonempty, hence (m, n) = (2, 1).
        pair = make_pair("so-grassmannian", m=2, n=1)
        f = entry_field("so", 3, 0, 0)
        cfg = SampleConfig(seed=13)
        diffs = []
        for i in range(5):
            p = random_pair_point(pair, cfg, i)
            horiz, full, _ = quotient_ops(pair, f, p)
            diffs.append(abs(horiz - full))
        assert max(diffs) > 1e-3
