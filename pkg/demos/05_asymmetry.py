"""
Asymmetry generating power
==========================

Weight the generated coherences by energy gaps. The result sits between
min_gap**2 * CGP and max_gap**2 * CGP, and only sees the gaps.
"""

import numpy as np

from cgpower.asymmetry import HamiltonianSpectrum, agp, agp_monte_carlo
from cgpower.cgp import cgp_channel, mixture_channel
from cgpower.ensembles import haar_unitaries
from cgpower.fixtures import diagonal_phase, hadamard

print("hadamard, H = diag(0, 1):", agp(hadamard(2), [0, 1]).value)

rng = np.random.default_rng(3)
d = 4
h = HamiltonianSpectrum(rng.uniform(-1, 1, d))
e = mixture_channel(haar_unitaries(d, 3, seed=4), rng.dirichlet(np.ones(3)))
res = agp(e, h)
print(f"AGP {res.value:.5f} in [{res.lower_bound:.5f}, {res.upper_bound:.5f}], CGP {cgp_channel(e).raw:.5f}")
est = agp_monte_carlo(e, h, n=50_000, seed=0)
print(f"Monte Carlo {est.mean:.5f} +- {est.std_error:.1e}")

# shifting H changes nothing, scaling by s multiplies by s^2
print("shift:", agp(e, h.shifted(3.7)).value - res.value)
print("scale 2:", agp(e, h.scaled(2.0)).value / res.value)

# phase-covariant channels generate no asymmetry
cov = mixture_channel([diagonal_phase(rng.uniform(0, 2 * np.pi, d)) for _ in range(3)], [0.2, 0.3, 0.5])
print("covariant channel:", agp(cov, h).value)

# distribution over Haar unitaries depends only on the gaps
vals = lambda spec: np.array([agp(u, spec).value for u in haar_unitaries(d, 2000, seed=11)])
a, b = vals(h), vals(h.shifted(-5.0))
print("same Haar sample, shifted spectrum, max diff:", np.max(np.abs(a - b)))
