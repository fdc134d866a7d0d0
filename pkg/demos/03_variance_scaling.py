"""
How fast does the spread shrink?
================================

Fit Var ~ A / d**alpha over a few dimensions. The sampled exponent comes out
near 3.8, and d**4 * Var keeps creeping up towards a constant, so the decay
looks like 1/d**4 rather than 1/d**3.
"""

from cgpower.statistics import variance_scaling_fit

dims = [6, 10, 20, 40]
fit = variance_scaling_fit(dims, 10_000, seed=500)
print(f"alpha = {fit.exponent:.3f}, A = {fit.amplitude:.3g}")
for d, v in zip(dims, fit.variances):
    print(f"d={d:3d}  var {v:.3e}  d^3 var {d**3 * v:.3f}  d^4 var {d**4 * v:.3f}")
