"""Dephasing, coherence measures and incoherence predicates.

The preferred basis is the computational basis. A different basis ``V|i>``
is handled by conjugating the map with ``V`` instead of passing a basis.
"""

from __future__ import annotations

import numpy as np

from .channels import KrausChannel
from .matrix_core import STRUCT_TOL, as_square, check_density_matrix, check_unitary, norm2_sq, trace_norm


def dephase(x) -> np.ndarray:
    """Keep only the diagonal. Works on stacks of matrices as well."""
    x = np.asarray(x, dtype=complex)
    out = np.zeros_like(x)
    idx = np.arange(x.shape[-1])
    out[..., idx, idx] = x[..., idx, idx]
    return out


def q_project(x) -> np.ndarray:
    """Off-diagonal part ``x - dephase(x)``."""
    x = np.asarray(x, dtype=complex)
    return x - dephase(x)


def dephase_in_basis(x, v) -> np.ndarray:
    """Dephasing with respect to the basis ``{V|i>}``: ``V D(V^dagger x V) V^dagger``."""
    v = np.asarray(v, dtype=complex)
    return v @ dephase(v.conj().T @ np.asarray(x, dtype=complex) @ v) @ v.conj().T


def c_b(rho, check: bool = True) -> float:
    """Squared 2-norm of the off-diagonal part: ``sum_{i != j} |rho_ij|^2``."""
    rho = check_density_matrix(rho) if check else as_square(rho, "rho")
    return norm2_sq(q_project(rho))


def c_b_tilde(rho, check: bool = True) -> float:
    """Trace norm of the off-diagonal part."""
    rho = check_density_matrix(rho) if check else as_square(rho, "rho")
    return trace_norm(q_project(rho))


def is_incoherent_unitary(u, tol: float = STRUCT_TOL):
    """Decompose ``u`` as ``U|j> = eta_j |sigma(j)>`` if possible.

    Returns ``(sigma, eta)`` with ``sigma`` an integer permutation array and
    ``eta`` the unit-modulus phases, or ``None`` when ``u`` is not a
    permutation-phase matrix.
    """
    u = check_unitary(u, tol)
    mod = np.abs(u)
    sigma = np.argmax(mod, axis=0)
    cols = np.arange(u.shape[0])
    if np.any(np.abs(mod[sigma, cols] - 1.0) > tol):
        return None
    if len(np.unique(sigma)) != len(sigma):
        return None
    return sigma, u[sigma, cols]


def matrix_units(d: int) -> np.ndarray:
    """All ``|l><m|`` as a ``(d*d, d, d)`` stack."""
    units = np.zeros((d * d, d, d), dtype=complex)
    k = np.arange(d * d)
    units[k, k // d, k % d] = 1.0
    return units


def is_incoherent_channel(e: KrausChannel, tol: float = STRUCT_TOL) -> bool:
    """Check ``E o D == D o E`` on the matrix-unit basis."""
    if not isinstance(e, KrausChannel):
        e = KrausChannel(e)
    units = matrix_units(e.dim)
    lhs = e(dephase(units))
    rhs = dephase(e(units))
    return bool(np.max(np.abs(lhs - rhs)) <= tol)
