"""Integral-representation pathway for R_k(cos theta), independent of the recurrence.

Two formulas are implemented: the cosine-kernel integral with an algebraic
endpoint singularity for alpha > -1/2, and its alpha -> -1/2 limit, which has
a separate non-integral leading term.  Both serve as cross-checks against the
recurrence values, so nothing here is shared with the recurrence code path.
"""

import math
from math import lgamma, exp, cos, sin

import numpy as np

from .errors import AccuracyError
from .specfun import JacobiParams, PolyValue, _hyp2f1_array
from .quadrature import mehler_inner_rule, mapped_jacobi_rule, converge_doubling

__all__ = ["mehler_r", "mehler_limit_r", "kernel_mass_h"]

_THETA_MIN = 1e-6


def _check_theta(theta: float) -> float:
    theta = float(theta)
    if not _THETA_MIN < theta < math.pi - _THETA_MIN:
        raise ValueError(f"theta must lie in ({_THETA_MIN}, pi - {_THETA_MIN})")
    return theta


def _check_f_argument(z: np.ndarray):
    """The 2F1 argument must stay inside [0, 1) at every node."""
    if z.size and (float(np.min(z)) < 0.0 or float(np.max(z)) >= 1.0):
        raise AccuracyError("hypergeometric argument left [0, 1) at a node",
                            achieved=float(np.max(z)))


def mehler_r(k: int, params: JacobiParams, theta: float,
             rtol: float = 1e-10) -> PolyValue:
    """R_k(cos theta) through the singular-kernel integral, for alpha > -1/2.

    The (cos phi - cos theta)^(alpha - 1/2) factor is absorbed by the
    dedicated inner rule; the remaining integrand factor is smooth in phi and
    its node count doubles until two sizes agree.
    """
    if k < 0:
        raise ValueError("degree must be nonnegative")
    a, b = params.alpha, params.beta
    if a <= -0.5:
        raise ValueError("integral pathway needs alpha > -1/2")
    theta = _check_theta(theta)
    c = cos(theta)
    lam = k + (a + b + 1.0) / 2.0
    pref = (2.0 ** ((a + b + 1.0) / 2.0)
            * exp(lgamma(a + 1.0) - lgamma(0.5) - lgamma(a + 0.5))
            * (1.0 - c) ** -a)

    def evaluate(n: int) -> float:
        rule = mehler_inner_rule(theta, a, n)
        phi = rule.nodes
        t = np.cos(phi)
        z = (t - c) / (1.0 + t)
        _check_f_argument(z)
        f21 = _hyp2f1_array((a + b + 1.0) / 2.0, (a + b) / 2.0, a + 0.5, z)
        g = np.cos(lam * phi) * (1.0 + t) ** (-(a + b) / 2.0) * f21
        return pref * float(rule.weights @ g)

    value = converge_doubling(evaluate, n0=k + 48, rtol=rtol)
    return PolyValue(k, value, "mehler-integral")


def mehler_limit_r(k: int, beta: float, theta: float,
                   rtol: float = 1e-10) -> PolyValue:
    """R_k(cos theta) at alpha = -1/2 through the limit formula, for beta < 0.

    The leading cosine term is exact; the correction integral has a smooth
    integrand (its 2F1 series still converges at argument 1 since beta < 0)
    and is handled by a plain mapped Gauss rule with doubling.
    """
    if k < 0:
        raise ValueError("degree must be nonnegative")
    if not -1.0 < beta < 0.0:
        raise ValueError("limit formula needs beta in (-1, 0)")
    theta = _check_theta(theta)
    c = cos(theta)
    nu = k + beta / 2.0 + 0.25
    first = cos(theta / 2.0) ** (-beta - 0.5) * cos(nu * theta)

    def correction(n: int) -> float:
        rule = mapped_jacobi_rule(n, 0.0, 0.0, 0.0, theta)
        phi = rule.nodes
        z = (np.cos(phi) - c) / (1.0 + np.cos(phi))
        _check_f_argument(z)
        f21 = _hyp2f1_array(beta / 2.0 + 1.25, beta / 2.0 + 0.75, 2.0, z)
        g = np.cos(phi / 2.0) ** (-beta - 1.5) * np.cos(nu * phi) * f21
        return float(rule.weights @ g)

    integral = converge_doubling(correction, n0=k + 48, rtol=rtol)
    value = first + 0.25 * (beta * beta - 0.25) * sin(theta / 2.0) * integral
    return PolyValue(k, value, "limit-formula")


def kernel_mass_h(theta: float, alpha: float) -> float:
    """(sin theta)^(-2 alpha) times the mass of the singular kernel on [0, theta].

    Stays bounded as theta -> 0+ whenever alpha > -1/2, which is what makes
    the interchange of integrals behind the coefficient estimates legitimate.
    """
    if not 0.0 < theta <= math.pi / 2.0:
        raise ValueError("theta must lie in (0, pi/2]")
    if alpha <= -0.5:
        raise ValueError("kernel mass needs alpha > -1/2")

    def evaluate(n: int) -> float:
        rule = mehler_inner_rule(theta, alpha, n)
        return float(np.sum(rule.weights))

    mass = converge_doubling(evaluate, n0=16, rtol=1e-12)
    return sin(theta) ** (-2.0 * alpha) * mass
