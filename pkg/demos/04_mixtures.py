"""
Mixing maximal unitaries
========================

Random-unitary channels over the simplex spanned by three unitaries.
"""

import numpy as np

from cgpower.cgp import cgp_channel, cgp_unitary, mixture_channel, mixture_scan
from cgpower.fixtures import fourier, fourier_rowswap, identity, tuned_unitary

# identity, a half-way unitary and Fourier (d=3)
half = tuned_unitary(3, 0.5)
print("tuned unitary normalized CGP:", cgp_unitary(half).normalized)
rows = mixture_scan([identity(3), half, fourier(3)], grid_steps=4)
for p1, p2, p3, c in rows:
    print(f"  p=({p1:.2f}, {p2:.2f}, {p3:.2f})  C/C_d = {c:.4f}")

# three maximal unitaries in d=10: every vertex is 1, the middle is not
d = 10
us = [fourier(d), fourier_rowswap(d, 0, 1), fourier_rowswap(d, d - 2, d - 1)]
print("vertices:", [round(cgp_unitary(u).normalized, 12) for u in us])
bary = cgp_channel(mixture_channel(us, [1 / 3] * 3)).normalized
print(f"barycenter: {bary:.12f} (281/405 = {281 / 405:.12f})")

grid = np.array([r[3] for r in mixture_scan(us, grid_steps=10)])
print(f"scan over 66 points: min {grid.min():.4f}, max {grid.max():.4f}")
