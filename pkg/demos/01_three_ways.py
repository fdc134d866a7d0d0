"""
Three ways to get the coherence generating power
================================================

The closed form, a two-copy SWAP measurement and a Monte Carlo average over
incoherent inputs should all agree.
"""

import numpy as np

from cgpower.cgp import cgp_unitary, max_cgp
from cgpower.fixtures import fourier, hadamard, identity, random_haar
from cgpower.protocol import monte_carlo_cgp, simulate_protocol_unitary

# a few unitaries: nothing, maximal, and two generic ones
cases = {
    "identity d=3": identity(3),
    "hadamard d=2": hadamard(2),
    "fourier d=5": fourier(5),
    "haar d=4": random_haar(4, seed=1),
}

print(f"{'unitary':14s} {'closed':>10s} {'two-copy':>10s} {'MC mean':>10s} {'MC SE':>9s}")
for name, u in cases.items():
    closed = cgp_unitary(u).raw
    proto = simulate_protocol_unitary(u).cgp_value
    est = monte_carlo_cgp(u, n=50_000, seed=0)
    print(f"{name:14s} {closed:10.6f} {proto:10.6f} {est.mean:10.6f} {est.std_error:9.2e}")

# Fourier hits the ceiling in every dimension
for d in (2, 3, 8, 16):
    print(d, cgp_unitary(fourier(d)).raw, max_cgp(d))

# the protocol only needs separable input: rho_B and |phi+> give the same omega
u = random_haar(3, seed=7)
a = simulate_protocol_unitary(u, start="rho_b").omega
b = simulate_protocol_unitary(u, start="phi_plus").omega
print("max |omega(rho_B) - omega(phi+)| =", np.max(np.abs(a - b)))
