"""
Growth outside the bounded region
=================================

Below alpha = -1/2 the normalized polynomials are no longer uniformly
bounded and the coefficient story reverses: an integrable power weight
(1 + cos theta)^rho has coefficients with an exactly predictable algebraic
exponent -2 rho - alpha - beta - 2, which can even be positive.  The fit
recovers the exponent; in the positive case the decades visibly climb.
"""

from fourierjacobi import JacobiParams, counterexample_slope

cases = [
    (0.0, -0.5, -0.3),
    (0.5, 0.0, -0.6),
    (1.0, 0.25, -0.9),
]

for alpha, beta, rho in cases:
    rep = counterexample_slope(JacobiParams(alpha, beta), rho, kmax=1024)
    print(f"(alpha, beta, rho) = ({alpha}, {beta}, {rho}):")
    print(f"  predicted exponent {rep.predicted_slope:+.4f},"
          f" fitted {rep.fit.slope:+.4f},"
          f" r^2 = {rep.fit.r_squared:.6f}")

# Divergence regime: 0 < beta + rho + 1 < (beta - alpha) / 2 makes the
# exponent positive, so the moments of an integrable function grow without
# bound.  Decade maxima rise monotonically.
params = JacobiParams(-0.9, 0.0)
rep = counterexample_slope(params, -0.8, kmax=1024)
print(f"\ndivergence regime at (alpha, beta, rho) = (-0.9, 0, -0.8):")
print(f"  predicted exponent {rep.predicted_slope:+.4f} (positive)")
print(f"  flagged as divergence regime: {rep.divergence_regime}")
print("  decade maxima: "
      + ", ".join(f"{m:.2f}" for m in rep.decade_maxima))
