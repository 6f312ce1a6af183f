"""
Jacobi polynomials by recurrence
================================

Evaluate P_k^(alpha,beta) and its normalized companion R_k = P_k / P_k(1),
and look at where |R_k| stays below 1 and where it escapes.
"""

import numpy as np

from fourierjacobi import (
    JacobiParams,
    jacobi_p,
    jacobi_p_one,
    jacobi_r,
    jacobi_r_table,
    sup_norm_r,
)

# A parameter pair inside the bounded region: alpha >= beta, alpha >= -1/2.
params = JacobiParams(0.5, -0.25)
print(f"(alpha, beta) = ({params.alpha}, {params.beta}),"
      f" inside the bounded region: {params.in_s}")

# R_k(1) = 1 by construction, exactly.
for k in (0, 1, 5, 20):
    print(f"  R_{k}(1) = {jacobi_r(k, params, 1.0)!r},"
          f"  P_{k}(1) = {jacobi_p_one(k, params):.6f}")

# A few raw values along the interval.
xs = np.linspace(-1.0, 1.0, 5)
tab = jacobi_r_table(6, params, xs)
print("\nR_k(x) for k = 0..6 at five points:")
for i, x in enumerate(xs):
    row = " ".join(f"{v:+.4f}" for v in tab[:, i])
    print(f"  x = {x:+.2f}: {row}")

# Chebyshev case: R_k(cos theta) = cos(k theta).
cheb = JacobiParams(-0.5, -0.5)
theta = 0.9
print(f"\nChebyshev sanity at theta = {theta}:")
print(f"  R_7(cos theta) = {jacobi_r(7, cheb, np.cos(theta)):.12f}")
print(f"  cos(7 theta)   = {np.cos(7 * theta):.12f}")

# Inside the region the sup of |R_k| over [-1, 1] is exactly 1 (attained at
# x = 1); below it the sup grows with the degree.
print("\nsup over [-1,1] of |R_k|:")
inside = JacobiParams(0.5, -0.25)
outside = JacobiParams(-0.75, -0.75)
for k in (16, 64, 256):
    print(f"  k = {k:3d}: inside S -> {sup_norm_r(k, inside):.6f},"
          f"  at (-0.75, -0.75) -> {sup_norm_r(k, outside):.6f}")

# The growth rate at (-0.75,-0.75) should be about (k+1)^0.25.
print("\nratio sup / (k+1)^0.25 at (-0.75, -0.75):")
for k in (16, 64, 256):
    print(f"  k = {k:3d}: {sup_norm_r(k, outside) / (k + 1) ** 0.25:.4f}")

# jacobi_p gives the unnormalized value when you need the classical scaling.
print(f"\nP_3^(0.5,-0.25)(0.3) = {jacobi_p(3, params, 0.3):.10f}")
