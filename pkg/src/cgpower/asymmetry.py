"""Asymmetry generating power (AGP) with respect to a nondegenerate Hamiltonian.

The Hamiltonian is diagonal in the computational basis and is stored as its
spectrum. For a unital channel ``E``::

    A_H(E) = sum_{i, l != m} (e_l - e_m)^2 |<l|E(|i><i|)|m>|^2 / (d (d + 1))
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cgp import cgp_channel
from .ensembles import map_blocks
from .protocol import MonteCarloEstimate, as_channel, diagonal_sampler, diagonal_states

DEGENERACY_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class HamiltonianSpectrum:
    eigenvalues: np.ndarray

    def __post_init__(self):
        ev = np.asarray(self.eigenvalues, dtype=float).ravel()
        if ev.size < 2:
            raise ValueError("spectrum needs d >= 2 eigenvalues")
        if not np.all(np.isfinite(ev)):
            raise ValueError("eigenvalues must be finite")
        ev.setflags(write=False)
        object.__setattr__(self, "eigenvalues", ev)
        if self.min_gap < DEGENERACY_TOL:
            raise ValueError(f"degenerate spectrum: min gap {self.min_gap:.3g} < {DEGENERACY_TOL:g}")

    @property
    def dim(self) -> int:
        return self.eigenvalues.size

    @property
    def gaps(self) -> np.ndarray:
        """``gaps[l, m] = e_l - e_m``."""
        return self.eigenvalues[:, None] - self.eigenvalues[None, :]

    @property
    def min_gap(self) -> float:
        s = np.sort(self.eigenvalues)
        return float(np.min(np.diff(s)))

    @property
    def max_gap(self) -> float:
        return float(self.eigenvalues.max() - self.eigenvalues.min())

    def shifted(self, shift: float) -> "HamiltonianSpectrum":
        return HamiltonianSpectrum(self.eigenvalues + shift)

    def scaled(self, factor: float) -> "HamiltonianSpectrum":
        return HamiltonianSpectrum(self.eigenvalues * factor)

    def matrix(self) -> np.ndarray:
        return np.diag(self.eigenvalues).astype(complex)


@dataclass(frozen=True)
class AgpResult:
    value: float
    lower_bound: float
    upper_bound: float

    def as_dict(self) -> dict:
        return {"agp": self.value, "lower_bound": self.lower_bound, "upper_bound": self.upper_bound}


def _spectrum(h) -> HamiltonianSpectrum:
    return h if isinstance(h, HamiltonianSpectrum) else HamiltonianSpectrum(h)


def agp(e, h) -> AgpResult:
    """Closed-form AGP of a unital channel (or unitary) with bounds ``delta^2 C`` and ``||H||^2 C``."""
    chan = as_channel(e)
    h = _spectrum(h)
    if chan.dim != h.dim:
        raise ValueError(f"channel dimension {chan.dim} does not match spectrum dimension {h.dim}")
    d = chan.dim
    a = chan.kraus
    images = np.einsum("kli,kmi->ilm", a, a.conj())
    weight = (images.real**2 + images.imag**2) * h.gaps**2
    value = max(float(weight.sum()) / (d * (d + 1)), 0.0)
    c = cgp_channel(chan).raw
    return AgpResult(value=value, lower_bound=h.min_gap**2 * c, upper_bound=h.max_gap**2 * c)


def commutator(h: HamiltonianSpectrum, x: np.ndarray) -> np.ndarray:
    """``[H, x]`` for a matrix or stack of matrices."""
    hm = h.matrix()
    return hm @ x - x @ hm


def agp_monte_carlo(
    e, h, n: int = 100_000, seed: int = 0, ensemble: str = "haar", workers: int | None = None
) -> MonteCarloEstimate:
    """Average of ``||[H, E(rho)]||_2^2`` over random incoherent inputs ``rho``."""
    chan = as_channel(e)
    h = _spectrum(h)
    if chan.dim != h.dim:
        raise ValueError(f"channel dimension {chan.dim} does not match spectrum dimension {h.dim}")
    draw = diagonal_sampler(ensemble)
    d = chan.dim

    def block(rng, m):
        comm = commutator(h, chan(diagonal_states(draw(rng, d, m))))
        return np.sum(comm.real**2 + comm.imag**2, axis=(-2, -1))

    return MonteCarloEstimate.from_samples(map_blocks(n, seed, block, workers), seed)


def gap_spectrum_invariance_check(u, h, shift: float, tol: float = 1e-12) -> bool:
    """Whether a uniform energy shift leaves the AGP of ``u`` unchanged."""
    h = _spectrum(h)
    return abs(agp(u, h).value - agp(u, h.shifted(shift)).value) <= tol
