"""Special-function kernels: Jacobi and Laguerre polynomials, Gauss 2F1, norm constants.

Polynomials are evaluated by forward three-term recurrence.  The normalized
variants divide by the value at the right endpoint (x = 1 for Jacobi, x = 0
for Laguerre) so that every family starts at exactly 1 there.
"""

from dataclasses import dataclass
from math import lgamma, exp

import numpy as np
from scipy.special import gammaln, gammasgn

from .errors import AccuracyError

__all__ = [
    "JacobiParams",
    "PolyValue",
    "jacobi_p",
    "jacobi_r",
    "jacobi_p_one",
    "jacobi_r_table",
    "laguerre_l",
    "laguerre_r",
    "laguerre_l_zero",
    "laguerre_r_table",
    "hyp2f1",
    "h_normalizer",
    "h_normalizer_table",
]

_X_SLACK = 1e-12  # quadrature nodes may stick out of [-1, 1] by roundoff


@dataclass(frozen=True)
class JacobiParams:
    """Exponent pair (alpha, beta) of a Jacobi weight, both > -1."""

    alpha: float
    beta: float

    def __post_init__(self):
        if not (self.alpha > -1.0 and self.beta > -1.0):
            raise ValueError(f"Jacobi exponents must be > -1, got ({self.alpha}, {self.beta})")

    @property
    def in_s(self) -> bool:
        """True when alpha >= beta and alpha >= -1/2 (the bounded-polynomial region)."""
        return self.alpha >= self.beta and self.alpha >= -0.5


@dataclass(frozen=True)
class PolyValue:
    """A polynomial value together with the pathway that produced it."""

    degree: int
    value: float
    pathway: str  # "recurrence", "mehler-integral", or "limit-formula"


def _check_degree(k) -> int:
    if not isinstance(k, (int, np.integer)) or k < 0:
        raise ValueError(f"degree must be a nonnegative integer, got {k!r}")
    return int(k)


def _check_x(x):
    arr = np.asarray(x, dtype=float)
    if np.any(np.abs(arr) > 1.0 + _X_SLACK):
        raise ValueError("argument outside [-1, 1]")
    return arr


def jacobi_p(k: int, params: JacobiParams, x):
    """Jacobi polynomial P_k at x, for x in [-1, 1] (scalar or array)."""
    k = _check_degree(k)
    arr = _check_x(x)
    a, b = params.alpha, params.beta
    pm1 = np.ones_like(arr)
    if k == 0:
        out = pm1
    else:
        p = (a + 1.0) + (a + b + 2.0) * (arr - 1.0) / 2.0
        for m in range(2, k + 1):
            s = 2.0 * m + a + b
            c1 = 2.0 * m * (m + a + b) * (s - 2.0)
            c2 = (s - 1.0) * (a * a - b * b)
            c3 = (s - 1.0) * s * (s - 2.0)
            c4 = 2.0 * (m + a - 1.0) * (m + b - 1.0) * s
            p, pm1 = ((c2 + c3 * arr) * p - c4 * pm1) / c1, p
        out = p
    return float(out) if np.isscalar(x) else out


def jacobi_p_one(k: int, params: JacobiParams) -> float:
    """P_k(1) = binom(k + alpha, k), computed through log-gamma."""
    k = _check_degree(k)
    a = params.alpha
    return exp(lgamma(k + a + 1.0) - lgamma(k + 1.0) - lgamma(a + 1.0))


def jacobi_r(k: int, params: JacobiParams, x):
    """Normalized Jacobi polynomial R_k = P_k / P_k(1), with R_k(1) = 1 exactly."""
    k = _check_degree(k)
    arr = _check_x(x)
    vals = jacobi_p(k, params, arr) / jacobi_p_one(k, params)
    vals = np.where(arr == 1.0, 1.0, vals)
    return float(vals) if np.isscalar(x) else vals


def jacobi_r_table(kmax: int, params: JacobiParams, x: np.ndarray) -> np.ndarray:
    """R_k(x) for every k = 0..kmax as a (kmax+1, len(x)) array."""
    kmax = _check_degree(kmax)
    arr = np.atleast_1d(_check_x(x))
    a, b = params.alpha, params.beta
    tab = np.empty((kmax + 1, arr.size))
    tab[0] = 1.0
    if kmax >= 1:
        tab[1] = (a + 1.0) + (a + b + 2.0) * (arr - 1.0) / 2.0
    for m in range(2, kmax + 1):
        s = 2.0 * m + a + b
        c1 = 2.0 * m * (m + a + b) * (s - 2.0)
        c2 = (s - 1.0) * (a * a - b * b)
        c3 = (s - 1.0) * s * (s - 2.0)
        c4 = 2.0 * (m + a - 1.0) * (m + b - 1.0) * s
        tab[m] = ((c2 + c3 * arr) * tab[m - 1] - c4 * tab[m - 2]) / c1
    ks = np.arange(kmax + 1, dtype=float)
    ones = np.exp(gammaln(ks + a + 1.0) - gammaln(ks + 1.0) - lgamma(a + 1.0))
    tab /= ones[:, None]
    tab[:, arr == 1.0] = 1.0
    return tab


def laguerre_l(k: int, alpha: float, x):
    """Generalized Laguerre polynomial L_k^alpha at x >= 0 (scalar or array)."""
    k = _check_degree(k)
    if alpha <= -1.0:
        raise ValueError("Laguerre exponent must be > -1")
    arr = np.asarray(x, dtype=float)
    if np.any(arr < 0.0):
        raise ValueError("Laguerre argument must be nonnegative")
    pm1 = np.ones_like(arr)
    if k == 0:
        out = pm1
    else:
        p = 1.0 + alpha - arr
        for m in range(2, k + 1):
            p, pm1 = ((2.0 * m - 1.0 + alpha - arr) * p - (m - 1.0 + alpha) * pm1) / m, p
        out = p
    return float(out) if np.isscalar(x) else out


def laguerre_l_zero(k: int, alpha: float) -> float:
    """L_k^alpha(0) = binom(k + alpha, k)."""
    k = _check_degree(k)
    return exp(lgamma(k + alpha + 1.0) - lgamma(k + 1.0) - lgamma(alpha + 1.0))


def laguerre_r(k: int, alpha: float, x):
    """Normalized Laguerre polynomial R_k = L_k / L_k(0), with R_k(0) = 1 exactly."""
    arr = np.asarray(x, dtype=float)
    vals = laguerre_l(k, alpha, arr) / laguerre_l_zero(k, alpha)
    vals = np.where(arr == 0.0, 1.0, vals)
    return float(vals) if np.isscalar(x) else vals


def laguerre_r_table(kmax: int, alpha: float, x: np.ndarray) -> np.ndarray:
    """R_k^alpha(x) for every k = 0..kmax as a (kmax+1, len(x)) array."""
    kmax = _check_degree(kmax)
    arr = np.atleast_1d(np.asarray(x, dtype=float))
    if np.any(arr < 0.0):
        raise ValueError("Laguerre argument must be nonnegative")
    tab = np.empty((kmax + 1, arr.size))
    tab[0] = 1.0
    if kmax >= 1:
        tab[1] = 1.0 + alpha - arr
    for m in range(2, kmax + 1):
        tab[m] = ((2.0 * m - 1.0 + alpha - arr) * tab[m - 1]
                  - (m - 1.0 + alpha) * tab[m - 2]) / m
    ks = np.arange(kmax + 1, dtype=float)
    zeros = np.exp(gammaln(ks + alpha + 1.0) - gammaln(ks + 1.0) - lgamma(alpha + 1.0))
    tab /= zeros[:, None]
    tab[:, arr == 0.0] = 1.0
    return tab


def _hyp2f1_array(a: float, b: float, c: float, z: np.ndarray,
                  rtol: float = 1e-14, max_terms: int = 100_000) -> np.ndarray:
    """Gauss series summed simultaneously over an array of arguments in [0, 1)."""
    z = np.asarray(z, dtype=float)
    term = np.ones_like(z)
    total = np.ones_like(z)
    zmax = float(np.max(z, initial=0.0))
    for n in range(max_terms):
        term = term * ((a + n) * (b + n) / ((c + n) * (n + 1.0))) * z
        total += term
        if n % 4 == 3 or n < 8:
            q = max(zmax, float(np.max(np.abs((a + n) * (b + n) / ((c + n) * (n + 1.0)) * z))))
            if q < 1.0:
                tail = np.abs(term) * q / (1.0 - q)
                if np.all(tail <= rtol * np.maximum(np.abs(total), 1e-300)):
                    return total
            if not np.any(term):
                return total
    raise AccuracyError(
        "2F1 series did not converge within %d terms" % max_terms,
        achieved=float(np.max(np.abs(term))),
    )


def hyp2f1(a: float, b: float, c: float, z: float,
           rtol: float = 1e-14, max_terms: int = 100_000) -> float:
    """Gauss hypergeometric 2F1(a, b; c; z) by direct series.

    Valid for z in [0, 1); z = 1 is accepted when c - a - b > 0, where the
    series still converges (with an algebraic rather than geometric tail).
    Returns exactly 1.0 when z = 0 or when a or b is zero.
    """
    if c <= 0.0 and c == int(c):
        raise ValueError("2F1 parameter c must not be a nonpositive integer")
    if z < 0.0 or z > 1.0:
        raise ValueError(f"2F1 argument must lie in [0, 1], got {z}")
    if z == 0.0 or a == 0.0 or b == 0.0:
        return 1.0
    if z == 1.0:
        s = c - a - b
        if s <= 0.0:
            raise ValueError("2F1 series diverges at z = 1 unless c - a - b > 0")
        # The algebraic tail makes term-by-term summation useless here; the
        # Gauss evaluation is exact.
        sign = (gammasgn(c) * gammasgn(s) * gammasgn(c - a) * gammasgn(c - b))
        return sign * exp(gammaln(c) + gammaln(s)
                          - gammaln(c - a) - gammaln(c - b))
    return float(_hyp2f1_array(a, b, c, np.array([z]), rtol=rtol, max_terms=max_terms)[0])


def h_normalizer(k: int, params: JacobiParams) -> float:
    """Reciprocal squared norm h_k of R_k in the weighted L2 space.

    h_k = (2k+a+b+1) G(k+a+b+1) G(k+a+1) / (G(k+b+1) G(k+1) G(a+1)^2), with
    the k = 0 value rewritten through G(a+b+2) so that a + b = -1 is regular.
    Satisfies h_k * ||R_k||^2 = 1 and h_k ~ (k+1)^(2a+1) for large k.
    """
    k = _check_degree(k)
    a, b = params.alpha, params.beta
    if k == 0:
        return exp(lgamma(a + b + 2.0) - lgamma(a + 1.0) - lgamma(b + 1.0))
    return (2.0 * k + a + b + 1.0) * exp(
        lgamma(k + a + b + 1.0) + lgamma(k + a + 1.0)
        - lgamma(k + b + 1.0) - lgamma(k + 1.0) - 2.0 * lgamma(a + 1.0))


def h_normalizer_table(kmax: int, params: JacobiParams) -> np.ndarray:
    """h_k for every k = 0..kmax."""
    kmax = _check_degree(kmax)
    a, b = params.alpha, params.beta
    out = np.empty(kmax + 1)
    out[0] = exp(lgamma(a + b + 2.0) - lgamma(a + 1.0) - lgamma(b + 1.0))
    if kmax >= 1:
        ks = np.arange(1, kmax + 1, dtype=float)
        out[1:] = (2.0 * ks + a + b + 1.0) * np.exp(
            gammaln(ks + a + b + 1.0) + gammaln(ks + a + 1.0)
            - gammaln(ks + b + 1.0) - gammaln(ks + 1.0)
            - 2.0 * lgamma(a + 1.0))
    return out
