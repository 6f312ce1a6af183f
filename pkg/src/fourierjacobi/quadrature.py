"""Gaussian quadrature rules built from closed-form recurrence coefficients.

Nodes and weights come from the Golub-Welsch eigenvalue method applied to the
symmetric tridiagonal matrix of the monic three-term recurrence.  Rules are
cached per (n, exponents), and the node/weight arrays are frozen so cached
rules cannot be mutated by callers.
"""

from dataclasses import dataclass
from functools import lru_cache
from math import lgamma, exp, log, cos

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .errors import AccuracyError

__all__ = [
    "QuadratureRule",
    "gauss_jacobi_rule",
    "gauss_laguerre_rule",
    "gauss_legendre_rule",
    "mapped_jacobi_rule",
    "mehler_inner_rule",
    "integrate",
    "converge_doubling",
]


@dataclass(frozen=True)
class QuadratureRule:
    """A fixed quadrature rule: sum(weights * f(nodes)) approximates the integral."""

    nodes: np.ndarray
    weights: np.ndarray
    kind: str
    alpha: float
    beta: float
    interval: tuple[float, float]

    @property
    def order(self) -> int:
        return self.nodes.size

    def apply(self, f) -> float:
        return float(self.weights @ f(self.nodes))


def _freeze(rule: QuadratureRule) -> QuadratureRule:
    rule.nodes.setflags(write=False)
    rule.weights.setflags(write=False)
    return rule


def _golub_welsch(d: np.ndarray, e2: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Nodes and weights from monic recurrence diagonals (a_i) and (b_i).

    d holds a_0..a_{n-1}; e2 holds b_0..b_{n-1} with b_0 the total weight mass.
    """
    if d.size == 1:
        return d.copy(), e2[:1].copy()
    x, v = eigh_tridiagonal(d, np.sqrt(e2[1:]))
    w = e2[0] * v[0, :] ** 2
    return x, w


def _jacobi_coeffs(n: int, a: float, b: float) -> tuple[np.ndarray, np.ndarray]:
    i = np.arange(n, dtype=float)
    s = 2.0 * i + a + b
    d = np.empty(n)
    e2 = np.empty(n)
    d[0] = (b - a) / (a + b + 2.0)
    e2[0] = exp((a + b + 1.0) * log(2.0) + lgamma(a + 1.0) + lgamma(b + 1.0)
                - lgamma(a + b + 2.0))
    if n > 1:
        d[1:] = (b * b - a * a) / (s[1:] * (s[1:] + 2.0))
        e2[1] = 4.0 * (a + 1.0) * (b + 1.0) / ((a + b + 2.0) ** 2 * (a + b + 3.0))
    if n > 2:
        ii, ss = i[2:], s[2:]
        e2[2:] = (4.0 * ii * (ii + a) * (ii + b) * (ii + a + b)
                  / (ss * ss * (ss + 1.0) * (ss - 1.0)))
    return d, e2


@lru_cache(maxsize=256)
def _gauss_jacobi_cached(n: int, a: float, b: float) -> QuadratureRule:
    d, e2 = _jacobi_coeffs(n, a, b)
    x, w = _golub_welsch(d, e2)
    return _freeze(QuadratureRule(x, w, "gauss-jacobi", a, b, (-1.0, 1.0)))


def gauss_jacobi_rule(n: int, alpha: float, beta: float) -> QuadratureRule:
    """n-point rule for integrals of f(x) (1-x)^alpha (1+x)^beta over [-1, 1].

    Exact for polynomial f up to degree 2n - 1.
    """
    if n < 1:
        raise ValueError("rule size must be at least 1")
    if not (alpha > -1.0 and beta > -1.0):
        raise ValueError("Gauss-Jacobi exponents must be > -1")
    return _gauss_jacobi_cached(int(n), float(alpha), float(beta))


def gauss_legendre_rule(n: int) -> QuadratureRule:
    """n-point Gauss-Legendre rule on [-1, 1]."""
    return gauss_jacobi_rule(n, 0.0, 0.0)


@lru_cache(maxsize=64)
def _gauss_laguerre_cached(n: int, a: float) -> QuadratureRule:
    i = np.arange(n, dtype=float)
    d = 2.0 * i + a + 1.0
    e2 = np.empty(n)
    e2[0] = exp(lgamma(a + 1.0))
    if n > 1:
        e2[1:] = i[1:] * (i[1:] + a)
    x, w = _golub_welsch(d, e2)
    return _freeze(QuadratureRule(x, w, "gauss-laguerre", a, 0.0, (0.0, np.inf)))


def gauss_laguerre_rule(n: int, alpha: float) -> QuadratureRule:
    """n-point rule for integrals of f(x) x^alpha e^(-x) over [0, inf)."""
    if n < 1:
        raise ValueError("rule size must be at least 1")
    if alpha <= -1.0:
        raise ValueError("Gauss-Laguerre exponent must be > -1")
    return _gauss_laguerre_cached(int(n), float(alpha))


def mapped_jacobi_rule(n: int, alpha: float, beta: float,
                       lo: float, hi: float) -> QuadratureRule:
    """Gauss-Jacobi rule transplanted to [lo, hi].

    Integrates f(x) (hi-x)^alpha (x-lo)^beta dx; the endpoint factors are
    absorbed into the weights, so callers supply only the smooth part f.
    """
    if not hi > lo:
        raise ValueError("interval must have positive length")
    base = gauss_jacobi_rule(n, alpha, beta)
    h = 0.5 * (hi - lo)
    x = lo + (base.nodes + 1.0) * h
    w = base.weights * h ** (alpha + beta + 1.0)
    return _freeze(QuadratureRule(x, w, "mapped-jacobi", alpha, beta, (lo, hi)))


def mehler_inner_rule(theta: float, alpha: float, n: int) -> QuadratureRule:
    """Rule in phi over [0, theta] against the measure (cos phi - cos theta)^(alpha - 1/2) dphi.

    Built in the variable t = cos phi: the substitution contributes a factor
    (1 - t^2)^(-1/2), whose (1 - t)^(-1/2) endpoint part pairs with the
    (t - cos theta)^(alpha - 1/2) singularity to give a Gauss-Jacobi rule
    with exponents (-1/2, alpha - 1/2) on [cos theta, 1]; the remaining
    smooth factor (1 + t)^(-1/2) is folded into the weights pointwise.
    Nodes are returned as phi values in (0, theta).
    """
    if not theta > 1e-8:
        raise ValueError("inner rule needs theta > 1e-8")
    if alpha <= -0.5:
        raise ValueError("inner rule needs alpha > -1/2")
    c = cos(theta)
    base = gauss_jacobi_rule(n, -0.5, alpha - 0.5)
    h = 0.5 * (1.0 - c)
    t = c + (base.nodes + 1.0) * h
    w = base.weights * h ** alpha * (1.0 + t) ** -0.5
    phi = np.arccos(np.clip(t, -1.0, 1.0))
    return _freeze(QuadratureRule(phi, w, "mehler-inner", alpha, theta, (0.0, theta)))


def integrate(rule: QuadratureRule, f) -> float:
    """Apply a rule to a vectorized integrand (the smooth factor only)."""
    return rule.apply(f)


def converge_doubling(evaluate, n0: int, rtol: float = 1e-10,
                      nmax: int = 4096) -> float:
    """Evaluate at increasing rule sizes until two consecutive sizes agree.

    evaluate(n) must return the quantity computed with an n-point rule.  The
    size doubles until |v(2n) - v(n)| <= rtol * max(|v(2n)|, 1); raises
    AccuracyError if that never happens by nmax.
    """
    n = max(int(n0), 1)
    prev = evaluate(n)
    while n <= nmax:
        n *= 2
        cur = evaluate(n)
        if abs(cur - prev) <= rtol * max(abs(cur), 1.0):
            return cur
        prev = cur
    raise AccuracyError(
        f"quadrature failed to settle by n = {nmax}",
        achieved=abs(cur - prev) / max(abs(cur), 1.0),
    )
