"""
CGP of Haar random unitaries
============================

Mean, the exact d=2 density and concentration at larger d.
"""

import numpy as np

from cgpower.statistics import (
    analytic_mean,
    analytic_pdd_d2,
    ks_test_d2,
    levy_bound,
    moments_summary,
    sample_cgp_distribution,
    sample_normalized_cgp,
)

for d in (2, 3, 5, 8):
    s = sample_cgp_distribution(d, 50_000, seed=d)
    print(f"d={d}: raw mean {s.raw_mean:.5f} +- {s.raw_std_error:.1e}   exact {analytic_mean(d):.5f}")

# d=2: P(c) = 1/(2 sqrt(1-c)); the last bin averages over the c -> 1 spike,
# so it sits above the midpoint value
c = sample_normalized_cgp(2, 100_000, seed=0)
dens, edges = np.histogram(c, bins=10, range=(0, 1), density=True)
mid = 0.5 * (edges[1:] + edges[:-1])
for m, p in zip(mid, dens):
    print(f"  c={m:.2f}  histogram {p:.3f}  exact {analytic_pdd_d2(m):.3f}")
print("KS distance to 1 - sqrt(1 - c):", ks_test_d2(c))

# d=40: mass piles up near 1
c = sample_normalized_cgp(40, 20_000, seed=1)
mean, var, skew, kurt = moments_summary(c)
t, p = levy_bound(40)
print(f"d=40 mean {mean:.4f} (d/(d+1) = {40/41:.4f}), var {var:.2e}, skew {skew:.2f}, kurt {kurt:.2f}")
print(f"P(c >= {t:.3f}) = {np.mean(c >= t):.4f}, Levy lower bound {p:.4f}")
