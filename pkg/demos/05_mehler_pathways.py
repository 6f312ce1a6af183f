"""
Two pathways to the same polynomial value
=========================================

R_k(cos theta) can be computed by the three-term recurrence or as a
Dirichlet-Mehler integral with a singular cosine kernel.  The two routes
share no code past the quadrature layer, so their agreement is a strong
check on both.  At alpha = -1/2 the singular form degenerates and a
separate limit formula takes over.
"""

import math

import numpy as np

from fourierjacobi import (
    JacobiParams,
    jacobi_r,
    mehler_r,
    mehler_limit_r,
    kernel_mass_h,
)

# Legendre case, where the classical formula is textbook material.
params = JacobiParams(0.0, 0.0)
theta = math.pi / 3
for k in (0, 5, 12):
    rec = jacobi_r(k, params, math.cos(theta))
    meh = mehler_r(k, params, theta)
    print(f"k = {k:2d}: recurrence {rec:+.12f}   integral {meh.value:+.12f}"
          f"   ({meh.pathway})")

# General parameters: still agreement to quadrature tolerance.
params = JacobiParams(1.5, 0.25)
print(f"\n(alpha, beta) = (1.5, 0.25), theta = 2.0:")
for k in (3, 20):
    rec = jacobi_r(k, params, math.cos(2.0))
    meh = mehler_r(k, params, 2.0)
    print(f"  k = {k:2d}: |difference| = {abs(rec - meh.value):.2e}")

# The boundary alpha = -1/2: the limit formula, which collapses to a plain
# cosine when beta = -1/2 as well.
print("\nalpha = -1/2 limit formula:")
for beta in (-0.75, -0.9):
    lim = mehler_limit_r(12, beta, 2.5)
    rec = jacobi_r(12, JacobiParams(-0.5, beta), math.cos(2.5))
    print(f"  beta = {beta}: limit {lim.value:+.10f}  recurrence {rec:+.10f}"
          f"   ({lim.pathway})")

print(f"  beta = -1/2, k = 9: limit {mehler_limit_r(9, -0.5, 1.1).value:+.10f}"
      f"  cos(9 * 1.1) {math.cos(9 * 1.1):+.10f}")

# The kernel mass h(theta) behind the coefficient estimates stays bounded
# all the way down to theta = 0.
print("\nkernel mass h(theta) at alpha = 0.25:")
for theta in np.logspace(-4, math.log10(math.pi / 2), 6):
    print(f"  theta = {theta:.1e}: h = {kernel_mass_h(theta, 0.25):.6f}")
