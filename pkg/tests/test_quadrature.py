"""Gauss rules: exactness degrees, scipy agreement, singular-endpoint rules."""

import math

import numpy as np
import pytest
import scipy.special as sp
from scipy.integrate import quad

from fourierjacobi import (
    AccuracyError,
    gauss_jacobi_rule,
    gauss_legendre_rule,
    gauss_laguerre_rule,
    mapped_jacobi_rule,
    mehler_inner_rule,
    integrate,
    converge_doubling,
)


class TestGaussJacobi:
    def test_weight_mass(self):
        """Total weight is 2^(a+b+1) B(a+1, b+1); frozen at (0.5, -0.25)."""
        rule = gauss_jacobi_rule(12, 0.5, -0.25)
        np.testing.assert_allclose(float(np.sum(rule.weights)),
                                   2.279739027069754, rtol=1e-13)
        np.testing.assert_allclose(float(np.sum(rule.weights)),
                                   2.0 ** 1.25 * sp.beta(1.5, 0.75),
                                   rtol=1e-13)

    def test_polynomial_exactness(self):
        """An n-point rule integrates monomials up to degree 2n-1."""
        rule = gauss_jacobi_rule(20, 0.0, 0.0)
        got = float(rule.weights @ rule.nodes ** 38)
        np.testing.assert_allclose(got, 2.0 / 39.0, rtol=1e-13)
        assert abs(float(rule.weights @ rule.nodes ** 37)) < 1e-14

    def test_against_scipy(self):
        rng = np.random.default_rng(11)
        for _ in range(12):
            n = int(rng.integers(2, 50))
            a = float(rng.uniform(-0.9, 3.0))
            b = float(rng.uniform(-0.9, 3.0))
            rule = gauss_jacobi_rule(n, a, b)
            ref_x, ref_w = sp.roots_jacobi(n, a, b)
            np.testing.assert_allclose(rule.nodes, ref_x, atol=1e-12)
            np.testing.assert_allclose(rule.weights, ref_w,
                                       rtol=1e-10, atol=1e-14)

    def test_single_node(self):
        rule = gauss_jacobi_rule(1, 0.5, -0.5)
        assert rule.nodes.shape == (1,)
        np.testing.assert_allclose(float(np.sum(rule.weights)),
                                   2.0 * sp.beta(1.5, 0.5), rtol=1e-13)

    def test_structure(self):
        rule = gauss_jacobi_rule(8, 1.0, 0.0)
        assert np.all(np.diff(rule.nodes) > 0)
        assert np.all(rule.weights > 0)
        assert not rule.nodes.flags.writeable
        with pytest.raises(ValueError):
            gauss_jacobi_rule(0, 0.0, 0.0)


class TestGaussLegendreAndLaguerre:
    def test_legendre_matches_numpy(self):
        rule = gauss_legendre_rule(17)
        x, w = np.polynomial.legendre.leggauss(17)
        np.testing.assert_allclose(rule.nodes, x, atol=1e-13)
        np.testing.assert_allclose(rule.weights, w, rtol=1e-12)

    def test_laguerre_moment(self):
        """Third moment of x^2 e^(-x) is Gamma(6) = 120; frozen."""
        rule = gauss_laguerre_rule(15, 2.0)
        np.testing.assert_allclose(float(rule.weights @ rule.nodes ** 3),
                                   120.0, rtol=1e-12)

    def test_laguerre_against_scipy(self):
        rule = gauss_laguerre_rule(25, 0.5)
        ref_x, ref_w = sp.roots_genlaguerre(25, 0.5)
        np.testing.assert_allclose(rule.nodes, ref_x, rtol=1e-10)
        np.testing.assert_allclose(rule.weights, ref_w, rtol=1e-9, atol=1e-16)


class TestMappedRule:
    def test_beta_integral(self):
        """Mapped rule reproduces B(p, q) integrals on [0, 1]."""
        rule = mapped_jacobi_rule(10, -0.5, 0.25, 0.0, 1.0)
        got = float(np.sum(rule.weights))
        np.testing.assert_allclose(got, sp.beta(0.5, 1.25), rtol=1e-13)

    def test_plain_interval(self):
        """Zero exponents give ordinary Gauss-Legendre on [lo, hi]."""
        rule = mapped_jacobi_rule(12, 0.0, 0.0, 1.0, 4.0)
        got = integrate(rule, np.exp)
        np.testing.assert_allclose(got, math.exp(4.0) - math.exp(1.0),
                                   rtol=1e-13)
        assert np.all((rule.nodes > 1.0) & (rule.nodes < 4.0))

    def test_shifted_singularity(self):
        """Absorbed (x-lo)^(-1/2) on [2, 3] against adaptive quadrature."""
        rule = mapped_jacobi_rule(20, 0.0, -0.5, 2.0, 3.0)
        got = float(rule.weights @ np.cos(rule.nodes))
        ref, _ = quad(lambda x: math.cos(x) / math.sqrt(x - 2.0), 2.0, 3.0,
                      points=[2.0])
        np.testing.assert_allclose(got, ref, rtol=1e-10)


class TestMehlerInnerRule:
    def test_kernel_mass_frozen(self):
        """Integral of (cos(phi) - cos(1))^(-1/2) over [0, 1]; frozen value."""
        rule = mehler_inner_rule(1.0, 0.0, 24)
        np.testing.assert_allclose(float(np.sum(rule.weights)),
                                   2.3687991130297004, rtol=1e-12)

    def test_half_pi_zero_alpha(self):
        """At theta = pi/2 the mass is the B(1/4, 1/2)/2 cosine integral."""
        rule = mehler_inner_rule(math.pi / 2, 0.0, 30)
        np.testing.assert_allclose(float(np.sum(rule.weights)),
                                   2.6220575542921196, rtol=1e-12)
        np.testing.assert_allclose(float(np.sum(rule.weights)),
                                   0.5 * sp.beta(0.25, 0.5), rtol=1e-12)

    def test_alpha_half_is_plain_measure(self):
        """Exponent 1/2 - 1/2 = 0 leaves d(phi), so smooth f integrate exactly."""
        theta = 2.2
        rule = mehler_inner_rule(theta, 0.5, 30)
        got = float(rule.weights @ np.cos(rule.nodes))
        np.testing.assert_allclose(got, math.sin(theta), rtol=1e-12)

    def test_nodes_inside(self):
        theta = 0.7
        rule = mehler_inner_rule(theta, 1.25, 16)
        assert np.all((rule.nodes > 0.0) & (rule.nodes < theta))

    def test_oscillatory_against_adaptive(self):
        """cos(7 phi) against the singular measure, adaptive oracle."""
        theta, alpha = 1.3, 0.75
        rule = mehler_inner_rule(theta, alpha, 48)
        got = float(rule.weights @ np.cos(7.0 * rule.nodes))
        ref, _ = quad(lambda p: math.cos(7.0 * p)
                      * (math.cos(p) - math.cos(theta)) ** (alpha - 0.5),
                      0.0, theta, points=[theta], limit=200)
        np.testing.assert_allclose(got, ref, rtol=1e-9)

    def test_domain(self):
        with pytest.raises(ValueError):
            mehler_inner_rule(1e-9, 0.5, 8)
        with pytest.raises(ValueError):
            mehler_inner_rule(1.0, -0.5, 8)


class TestConvergeDoubling:
    def test_smooth_converges(self):
        def evaluate(n):
            rule = gauss_legendre_rule(n)
            return integrate(rule, lambda x: np.exp(2.0 * x))
        got = converge_doubling(evaluate, 8)
        np.testing.assert_allclose(got, (math.exp(2) - math.exp(-2)) / 2.0,
                                   rtol=1e-12)

    def test_reports_failure(self):
        """A value that never settles must raise with the residual attached."""
        with pytest.raises(AccuracyError) as exc:
            converge_doubling(lambda n: float(n), 3, nmax=64)
        assert exc.value.achieved is not None
