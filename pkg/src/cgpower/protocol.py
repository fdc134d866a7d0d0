"""Independent CGP oracles.

Two routes that do not use the closed forms of :mod:`cgpower.cgp`:

* a dense two-copy simulation of the swap-measurement protocol: prepare
  ``rho_B`` (or dephase ``|Phi+><Phi+|``), apply the map to both copies,
  dephase both copies and read off ``tr(S omega)``;
* plain Monte Carlo over random incoherent inputs, applying the map and
  measuring the squared 2-norm of the off-diagonal part sample by sample.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .channels import KrausChannel
from .coherence import dephase
from .ensembles import dephased_haar_batch, map_blocks, uniform_simplex_batch
from .matrix_core import STRUCT_TOL, check_unitary, max_entangled, projector, rho_b, swap_operator


@dataclass(frozen=True)
class ProtocolTrace:
    dim: int
    s_expectation_omega: float
    s_expectation_omega_tilde: float
    cgp_value: float
    omega: np.ndarray = field(repr=False, compare=False)
    omega_tilde: np.ndarray = field(repr=False, compare=False)

    def as_dict(self) -> dict:
        return {
            "dim": self.dim,
            "s_omega": self.s_expectation_omega,
            "s_omega_tilde": self.s_expectation_omega_tilde,
            "cgp": self.cgp_value,
        }


@dataclass(frozen=True)
class MonteCarloEstimate:
    mean: float
    std_error: float
    n_samples: int
    seed: int

    @classmethod
    def from_samples(cls, values: np.ndarray, seed: int) -> "MonteCarloEstimate":
        n = len(values)
        se = float(np.std(values, ddof=1) / np.sqrt(n)) if n > 1 else float("nan")
        return cls(mean=float(np.mean(values)), std_error=se, n_samples=n, seed=seed)

    def within(self, target: float, n_se: float = 3.0) -> bool:
        if self.std_error == 0.0:
            return abs(self.mean - target) <= 1e-12
        return abs(self.mean - target) <= n_se * self.std_error


# -- two-copy helpers ----------------------------------------------------------

def two_copy(op: np.ndarray) -> np.ndarray:
    return np.kron(op, op)


def apply_two_copy(e: KrausChannel, rho: np.ndarray) -> np.ndarray:
    """``(E (x) E)(rho)`` with Kraus operators ``A_k (x) A_k'`` over all pairs."""
    out = np.zeros_like(rho)
    for a in e.kraus:
        for b in e.kraus:
            ab = np.kron(a, b)
            out += ab @ rho @ ab.conj().T
    return out


def dephase_two_copy(x: np.ndarray, basis=None) -> np.ndarray:
    """``D (x) D`` on a two-copy operator.

    In the product basis ``D (x) D`` keeps exactly the diagonal of the
    ``d^2 x d^2`` matrix. With ``basis=V`` dephasing is w.r.t. ``{V|i>}``.
    """
    if basis is None:
        return dephase(x)
    w = two_copy(np.asarray(basis, dtype=complex))
    return w @ dephase(w.conj().T @ x @ w) @ w.conj().T


def initial_state(d: int, start: str = "rho_b", basis=None) -> np.ndarray:
    """Protocol input: ``rho_B`` directly, or ``|Phi+>`` dephased on both copies."""
    if start == "rho_b":
        rho = rho_b(d)
        if basis is not None:
            w = two_copy(np.asarray(basis, dtype=complex))
            rho = w @ rho @ w.conj().T
        return rho
    if start == "phi_plus":
        return dephase_two_copy(projector(max_entangled(d)), basis)
    raise ValueError(f"unknown start '{start}'")


def _swap_expectation(s: np.ndarray, rho: np.ndarray) -> float:
    return float(np.real(np.trace(s @ rho)))


def simulate_protocol_unitary(u, start: str = "rho_b", basis=None, tol: float = STRUCT_TOL) -> ProtocolTrace:
    """Run the swap protocol for a unitary.

    ``basis`` (a unitary ``V``) makes the preferred basis ``{V|i>}``; the
    dephasing steps and the input state are rotated accordingly.
    """
    u = check_unitary(u, tol)
    d = u.shape[0]
    if basis is not None:
        basis = check_unitary(basis, tol, "basis")
    rho = initial_state(d, start, basis)
    uu = two_copy(u)
    evolved = uu @ rho @ uu.conj().T
    omega = dephase_two_copy(evolved, basis)
    s = swap_operator(d)
    s_omega = _swap_expectation(s, omega)
    s_tilde = _swap_expectation(s, evolved)
    return ProtocolTrace(
        dim=d,
        s_expectation_omega=s_omega,
        s_expectation_omega_tilde=s_tilde,
        cgp_value=(1.0 - s_omega) / (d + 1),
        omega=omega,
        omega_tilde=evolved,
    )


def simulate_protocol_channel(e) -> ProtocolTrace:
    """Two-trace protocol for a unital channel: ``[tr(S w~) - tr(S w)] / (d + 1)``."""
    if not isinstance(e, KrausChannel):
        e = KrausChannel(e)
    d = e.dim
    omega_tilde = apply_two_copy(e, rho_b(d))
    omega = dephase_two_copy(omega_tilde)
    s = swap_operator(d)
    s_omega = _swap_expectation(s, omega)
    s_tilde = _swap_expectation(s, omega_tilde)
    return ProtocolTrace(
        dim=d,
        s_expectation_omega=s_omega,
        s_expectation_omega_tilde=s_tilde,
        cgp_value=(s_tilde - s_omega) / (d + 1),
        omega=omega,
        omega_tilde=omega_tilde,
    )


# -- Monte Carlo -----------------------------------------------------------------

def as_channel(e) -> KrausChannel:
    if isinstance(e, KrausChannel):
        return e
    arr = np.asarray(e, dtype=complex)
    if arr.ndim == 2:
        return KrausChannel.from_unitary(arr)
    return KrausChannel(arr)


def diagonal_sampler(ensemble: str):
    """Block sampler for incoherent inputs: ``'simplex'`` or ``'haar'`` (dephased Haar states)."""
    if ensemble == "simplex":
        return uniform_simplex_batch
    if ensemble == "haar":
        return dephased_haar_batch
    raise ValueError(f"unknown ensemble '{ensemble}'")


def diagonal_states(p: np.ndarray, basis=None) -> np.ndarray:
    """Stack of incoherent states ``sum_i p_i |i><i|`` (rotated by ``basis`` if given)."""
    m, d = p.shape
    rho = np.zeros((m, d, d), dtype=complex)
    idx = np.arange(d)
    rho[:, idx, idx] = p
    if basis is not None:
        rho = basis @ rho @ basis.conj().T
    return rho


def off_diagonal_weight(x: np.ndarray, basis=None) -> np.ndarray:
    """Per-sample ``||Q(x)||_2^2`` for a stack, w.r.t. ``{V|i>}`` when ``basis`` is given."""
    if basis is not None:
        x = basis.conj().T @ x @ basis
    off = x - dephase(x)
    return np.sum(off.real**2 + off.imag**2, axis=(-2, -1))


def monte_carlo_cgp(
    e,
    n: int = 100_000,
    seed: int = 0,
    ensemble: str = "simplex",
    basis=None,
    workers: int | None = None,
) -> MonteCarloEstimate:
    """Estimate the CGP as the average coherence generated from random incoherent inputs.

    ``e`` is a :class:`KrausChannel` or a unitary matrix. Inputs are drawn
    from the flat simplex (``ensemble='simplex'``) or as dephased Haar
    states (``ensemble='haar'``).
    """
    chan = as_channel(e)
    d = chan.dim
    draw = diagonal_sampler(ensemble)
    if basis is not None:
        basis = check_unitary(basis, name="basis")

    def block(rng, m):
        rho = diagonal_states(draw(rng, d, m), basis)
        return off_diagonal_weight(chan(rho), basis)

    return MonteCarloEstimate.from_samples(map_blocks(n, seed, block, workers), seed)
