"""Jacobi functions of the second parameter and the continuous transform."""

import math

import numpy as np
import pytest
from scipy.integrate import quad

from fourierjacobi import (
    AccuracyError,
    JacobiParams,
    Indicator,
    ExpDecay,
    HalfLineGrid,
    jacobi_function,
    jacobi_function_series,
    transform,
    transform_sweep,
    envelope_check,
)

# High-precision reference values for phi_tau(t), computed once with an
# arbitrary-precision hypergeometric series and frozen here.  Keys are
# (alpha, beta, tau, t).
PHI_REFERENCE = {
    (0.5, 0.0, 0.0, 0.1): 0.9962604398639691,
    (0.5, 0.0, 0.0, 1.0): 0.7072408922343933,
    (0.5, 0.0, 0.0, 3.0): 0.10463738774403665,
    (0.5, 0.0, 1.0, 0.1): 0.9946011115049377,
    (0.5, 0.0, 1.0, 1.0): 0.5965155509026023,
    (0.5, 0.0, 1.0, 3.0): 0.007696067863669905,
    (0.5, 0.0, 5.0, 0.1): 0.955272170763481,
    (0.5, 0.0, 5.0, 1.0): -0.132573786227051,
    (0.5, 0.0, 5.0, 3.0): 0.004220400520840282,
    (0.5, 0.0, 20.0, 0.1): 0.4530306515684205,
    (0.5, 0.0, 20.0, 1.0): 0.03120858539434225,
    (0.5, 0.0, 20.0, 3.0): -0.00047021547585241147,
    (1.0, 0.5, 0.0, 0.1): 0.9922272015460265,
    (1.0, 0.5, 0.0, 1.0): 0.4939091117473121,
    (1.0, 0.5, 0.0, 3.0): 0.013495939759712838,
    (1.0, 0.5, 1.0, 0.1): 0.9909873051717877,
    (1.0, 0.5, 1.0, 1.0): 0.4341152717282609,
    (1.0, 0.5, 1.0, 3.0): 0.0025110995708687326,
    (1.0, 0.5, 5.0, 0.1): 0.9615382369957362,
    (1.0, 0.5, 5.0, 1.0): -0.06685314362550493,
    (1.0, 0.5, 5.0, 3.0): 0.0004397736028255388,
    (1.0, 0.5, 20.0, 0.1): 0.5722020810095891,
    (1.0, 0.5, 20.0, 1.0): 0.003447431720504903,
    (1.0, 0.5, 20.0, 3.0): 2.4645306699866545e-05,
    (0.0, -0.25, 0.0, 0.1): 0.9985957056410292,
    (0.0, -0.25, 0.0, 1.0): 0.87603822091672,
    (0.0, -0.25, 0.0, 3.0): 0.39978621603908376,
    (0.0, -0.25, 1.0, 0.1): 0.9961016189198675,
    (0.0, -0.25, 1.0, 1.0): 0.6760084369378703,
    (0.0, -0.25, 1.0, 3.0): -0.057105039749432776,
    (0.0, -0.25, 5.0, 0.1): 0.9371725678999467,
    (0.0, -0.25, 5.0, 1.0): -0.1529265196153413,
    (0.0, -0.25, 5.0, 3.0): -0.002112758273995737,
    (0.0, -0.25, 20.0, 0.1): 0.2238144332236484,
    (0.0, -0.25, 20.0, 1.0): 0.13853548286496067,
    (0.0, -0.25, 20.0, 3.0): -0.027971770082024713,
}

# Same grid for the boundary alpha = -1/2, where the single-integral formula
# takes over.
PHI_LIMIT_REFERENCE = {
    (-0.5, 0.25, 0.0, 1.0): 0.7817420516584869,
    (-0.5, 0.25, 5.0, 2.0): -0.31364668206842494,
    (-0.5, 0.25, 20.0, 3.0): -0.1687413518251635,
    (-0.5, -0.25, 0.0, 1.0): 0.9710862051927185,
    (-0.5, -0.25, 5.0, 2.0): -0.6083610328192631,
    (-0.5, -0.25, 20.0, 3.0): -0.5354092096009156,
}


class TestJacobiFunction:
    @pytest.mark.parametrize("key", sorted(PHI_REFERENCE))
    def test_frozen_grid(self, key):
        a, b, tau, t = key
        got = jacobi_function(tau, t, JacobiParams(a, b))
        np.testing.assert_allclose(got, PHI_REFERENCE[key], rtol=1e-9,
                                   atol=1e-13)

    @pytest.mark.parametrize("key", sorted(PHI_LIMIT_REFERENCE))
    def test_frozen_limit_grid(self, key):
        a, b, tau, t = key
        got = jacobi_function(tau, t, JacobiParams(a, b))
        np.testing.assert_allclose(got, PHI_LIMIT_REFERENCE[key], rtol=1e-9,
                                   atol=1e-13)

    def test_value_at_origin(self):
        assert jacobi_function(3.0, 0.0, JacobiParams(0.5, 0.0)) == 1.0

    def test_cosine_reduction(self):
        """(alpha, beta) = (-1/2, -1/2) collapses to cos(tau t)."""
        params = JacobiParams(-0.5, -0.5)
        for tau in (0.0, 0.7, 5.0, 20.0):
            for t in (0.2, 1.0, 4.0):
                np.testing.assert_allclose(jacobi_function(tau, t, params),
                                           math.cos(tau * t), atol=1e-12)

    def test_series_cross_check(self):
        """The hypergeometric series agrees with the integral pathway."""
        for a, b in [(0.5, 0.0), (1.0, 0.5), (0.0, -0.25)]:
            params = JacobiParams(a, b)
            for tau in (0.0, 1.0, 5.0, 20.0):
                for t in (0.1, 1.0, 3.0):
                    if tau * t > 6.0:
                        continue   # series cancellation regime
                    s = jacobi_function_series(tau, t, params, rtol=1e-7)
                    g = jacobi_function(tau, t, params)
                    np.testing.assert_allclose(s, g, rtol=1e-6, atol=1e-10)

    def test_series_reports_cancellation(self):
        with pytest.raises(AccuracyError):
            jacobi_function_series(20.0, 3.0, JacobiParams(0.5, 0.0),
                                   rtol=1e-7)

    def test_series_matches_frozen(self):
        for key, want in PHI_REFERENCE.items():
            a, b, tau, t = key
            if tau * t > 6.0:
                continue
            got = jacobi_function_series(tau, t, JacobiParams(a, b))
            np.testing.assert_allclose(got, want, rtol=1e-7, atol=1e-11)

    def test_domain_errors(self):
        params = JacobiParams(0.5, 0.0)
        with pytest.raises(ValueError):
            jacobi_function(-1.0, 1.0, params)
        with pytest.raises(ValueError):
            jacobi_function(1.0, -0.1, params)
        with pytest.raises(ValueError):
            jacobi_function(1.0, 1.0, JacobiParams(-0.75, 0.0))
        with pytest.raises(ValueError):
            jacobi_function(1.0, 1.0, JacobiParams(0.0, -1.5))


class TestProfiles:
    def test_indicator_validation(self):
        Indicator(1.0, 2.0)
        with pytest.raises(ValueError):
            Indicator(0.0, 2.0)
        with pytest.raises(ValueError):
            Indicator(2.0, 1.0)

    def test_expdecay_validation(self):
        params = JacobiParams(0.5, 0.0)   # 2 rho = 3
        ExpDecay((1.0,), rate=4.0, params=params)
        with pytest.raises(ValueError):
            ExpDecay((1.0,), rate=3.0, params=params)
        with pytest.raises(ValueError):
            ExpDecay((1.0,), rate=2.9, params=params)

    def test_grid_validation(self):
        HalfLineGrid((0.5, 1.0, 2.0), (0.0, 1.0, 0.0))
        with pytest.raises(ValueError):
            HalfLineGrid((1.0, 0.5), (1.0, 1.0))
        with pytest.raises(ValueError):
            HalfLineGrid((0.0, 1.0), (1.0, 2.0))   # must start past zero
        with pytest.raises(ValueError):
            HalfLineGrid((0.5, 1.0), (1.0, 2.0, 3.0))


class TestTransform:
    def test_chebyshev_closed_form(self):
        """At (-1/2, -1/2) the transform of an indicator is a sine difference."""
        params = JacobiParams(-0.5, -0.5)
        f = Indicator(1.0, 2.0)
        scale = math.sqrt(2.0 / math.pi)
        for tau in (0.5, 1.0, 5.0, 20.0):
            want = scale * (math.sin(2.0 * tau) - math.sin(tau)) / tau
            np.testing.assert_allclose(transform(f, tau, params), want,
                                       rtol=1e-9, atol=1e-12)
        np.testing.assert_allclose(transform(f, 0.0, params), scale,
                                   rtol=1e-9)

    def test_additive_in_the_interval(self):
        params = JacobiParams(0.5, 0.0)
        for tau in (0.8, 6.0):
            whole = transform(Indicator(1.0, 3.0), tau, params)
            parts = (transform(Indicator(1.0, 2.0), tau, params)
                     + transform(Indicator(2.0, 3.0), tau, params))
            np.testing.assert_allclose(whole, parts, rtol=1e-8,
                                       atol=1e-12)

    def test_indicator_against_adaptive(self):
        """Straight adaptive integration of the production integrand."""
        from fourierjacobi.jtransform import _log_weight, _transform_prefactor
        params = JacobiParams(0.5, 0.0)
        f = Indicator(1.0, 2.0)
        pref = _transform_prefactor(params)
        for tau in (0.6, 3.0):
            def integrand(t):
                return (jacobi_function(tau, t, params)
                        * math.exp(_log_weight(t, params)))
            ref, _ = quad(integrand, 1.0, 2.0, limit=200)
            np.testing.assert_allclose(transform(f, tau, params), pref * ref,
                                       rtol=1e-8)

    def test_expdecay_against_adaptive(self):
        from fourierjacobi.jtransform import _log_weight, _transform_prefactor
        params = JacobiParams(0.0, -0.25)   # 2 rho = 1.5
        f = ExpDecay((1.0, 0.5), rate=3.0, params=params)
        pref = _transform_prefactor(params)
        tau = 1.2
        def integrand(t):
            return (f(t) * jacobi_function(tau, t, params)
                    * math.exp(_log_weight(t, params)))
        ref, _ = quad(integrand, 0.0, 40.0, limit=400)
        np.testing.assert_allclose(transform(f, tau, params), pref * ref,
                                   rtol=1e-7)

    def test_grid_profile_against_adaptive(self):
        from fourierjacobi.jtransform import _log_weight, _transform_prefactor
        params = JacobiParams(0.5, 0.0)
        f = HalfLineGrid((0.5, 1.5, 2.5), (0.0, 2.0, 0.0))
        pref = _transform_prefactor(params)
        tau = 2.0
        def integrand(t):
            return (f(t) * jacobi_function(tau, t, params)
                    * math.exp(_log_weight(t, params)))
        ref, _ = quad(integrand, 0.5, 2.5, limit=300, points=[1.5])
        np.testing.assert_allclose(transform(f, tau, params), pref * ref,
                                   rtol=1e-7)

    def test_sweep_matches_scalar(self):
        params = JacobiParams(0.5, 0.0)
        f = Indicator(1.0, 2.0)
        taus = np.array([0.0, 0.5, 2.0, 11.0])
        swept = transform_sweep(f, taus, params)
        single = transform_sweep(f, np.array([2.0]), params)
        np.testing.assert_allclose(single[0], swept[2], rtol=1e-12)
        for i, tau in enumerate(taus):
            np.testing.assert_allclose(swept[i], transform(f, tau, params),
                                       rtol=1e-9, atol=1e-14)

    def test_high_frequency_falloff(self):
        """The transform of a compact bump dies at large tau."""
        params = JacobiParams(0.5, 0.0)
        f = Indicator(1.0, 2.0)
        low = np.abs(transform_sweep(f, np.linspace(5.0, 10.0, 11), params))
        high = np.abs(transform_sweep(f, np.linspace(200.0, 220.0, 11),
                                      params))
        assert high.max() < 0.2 * low.max()


class TestEnvelope:
    def test_cosine_case_is_tight(self):
        rep = envelope_check(JacobiParams(-0.5, -0.5),
                             t_grid=np.linspace(0.0, 10.0, 21),
                             tau_grid=np.linspace(0.0, 20.0, 21))
        assert rep.verified
        assert rep.c_star <= 1.0 + 1e-9

    def test_positive_alpha_case(self):
        rep = envelope_check(JacobiParams(0.5, 0.0),
                             t_grid=np.linspace(0.0, 12.0, 25),
                             tau_grid=np.linspace(0.0, 30.0, 31))
        assert rep.verified
        assert 2.5 < rep.c_star < 3.5
        assert rep.worst_ratio <= rep.slack
