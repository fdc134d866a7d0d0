"""Named unitary generators used by tests, demos and the CLI."""

from __future__ import annotations

import numpy as np
from scipy.linalg import schur
from scipy.optimize import bisect

from .cgp import cgp_unitary
from .ensembles import haar_unitary


def identity(d: int) -> np.ndarray:
    return np.eye(d, dtype=complex)


def fourier(d: int) -> np.ndarray:
    """Discrete Fourier matrix ``<h|F|m> = exp(2 pi i h m / d) / sqrt(d)``."""
    h = np.arange(d)
    return np.exp(2j * np.pi * np.outer(h, h) / d) / np.sqrt(d)


def hadamard(d: int) -> np.ndarray:
    """Tensor power of the 2x2 Hadamard; ``d`` must be a power of two."""
    if d < 2 or d & (d - 1):
        raise ValueError(f"hadamard needs d = 2**n, got {d}")
    h2 = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)
    out = np.ones((1, 1), dtype=complex)
    while out.shape[0] < d:
        out = np.kron(out, h2)
    return out


def swap_rows(u, i: int, j: int) -> np.ndarray:
    out = np.array(u, dtype=complex)
    out[[i, j]] = out[[j, i]]
    return out


def fourier_rowswap(d: int, i: int = 0, j: int = 1) -> np.ndarray:
    return swap_rows(fourier(d), i, j)


def random_haar(d: int, seed: int = 0) -> np.ndarray:
    return haar_unitary(d, seed)


def permutation_phase(perm, phases) -> np.ndarray:
    """``U|j> = phases[j] |perm[j]>``."""
    perm = np.asarray(perm)
    d = len(perm)
    u = np.zeros((d, d), dtype=complex)
    u[perm, np.arange(d)] = phases
    return u


def random_permutation_phase(d: int, seed: int = 0) -> np.ndarray:
    rng = np.random.default_rng(seed)
    return permutation_phase(rng.permutation(d), np.exp(2j * np.pi * rng.random(d)))


def diagonal_phase(phases) -> np.ndarray:
    return np.diag(np.exp(1j * np.asarray(phases, dtype=float)))


def unitary_power(u, t: float) -> np.ndarray:
    """Principal-branch ``u**t`` via the complex Schur form (diagonal for normal ``u``)."""
    tri, z = schur(np.asarray(u, dtype=complex), output="complex")
    lam = np.diag(tri)
    return (z * np.exp(1j * t * np.angle(lam))) @ z.conj().T


def tuned_unitary(d: int, target: float, xtol: float = 1e-14) -> np.ndarray:
    """A unitary ``F**t`` on the path identity -> Fourier whose normalized CGP equals ``target``.

    ``t`` is found by bisection on ``[0, 1]``; the normalized CGP runs from 0
    to 1 along the path so a root always exists for ``0 < target < 1``.
    """
    if not 0.0 < target < 1.0:
        raise ValueError("target must lie strictly between 0 and 1")
    f = fourier(d)
    t = bisect(lambda s: cgp_unitary(unitary_power(f, s)).normalized - target, 0.0, 1.0, xtol=xtol)
    return unitary_power(f, t)


GENERATORS = {
    "identity": identity,
    "fourier": fourier,
    "hadamard": hadamard,
    "fourier-rowswap": fourier_rowswap,
    "random-haar": random_haar,
    "random-permutation-phase": random_permutation_phase,
}


def make(name: str, d: int, **kwargs) -> np.ndarray:
    if d < 2:
        raise ValueError("fixtures need d >= 2")
    try:
        gen = GENERATORS[name]
    except KeyError:
        raise ValueError(f"unknown generator '{name}'; choose from {sorted(GENERATORS)}") from None
    return gen(d, **kwargs)
