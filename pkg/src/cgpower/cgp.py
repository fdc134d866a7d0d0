"""Closed-form coherence generating power (CGP).

For a unitary ``U`` in dimension ``d``::

    C(U) = (1 - sum_ij |U_ij|^4 / d) / (d + 1)

and for a unital channel with Kraus operators ``A_k``::

    C(E) = sum_i sum_{l != m} |sum_k (A_k)_li conj(A_k)_mi|^2 / (d (d + 1))

Both are evaluated from matrix entries only; the two-copy superoperator
route lives in :mod:`cgpower.protocol` and is used as a cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .channels import KrausChannel, mixture_channel
from .matrix_core import STRUCT_TOL, MatrixFormatError, check_unitary

__all__ = [
    "CgpResult",
    "KrausChannel",
    "cgp_unitary",
    "cgp_channel",
    "cgp_basis_changed",
    "max_cgp",
    "is_mub_pair",
    "mixture_channel",
    "mixture_scan",
    "normalized_cgp_batch",
]


def max_cgp(d: int) -> float:
    """Largest attainable CGP in dimension ``d``: ``(1 - 1/d) / (d + 1)``."""
    if d < 1:
        raise ValueError("d must be >= 1")
    return (1.0 - 1.0 / d) / (d + 1)


@dataclass(frozen=True)
class CgpResult:
    raw: float
    normalized: float
    dim: int
    bound: float

    @classmethod
    def from_raw(cls, raw: float, d: int) -> "CgpResult":
        raw = max(float(raw), 0.0)
        bound = max_cgp(d)
        # d = 1 has no coherence at all; report 0 rather than 0/0
        normalized = raw / bound if d >= 2 else 0.0
        return cls(raw=raw, normalized=normalized, dim=d, bound=bound)

    def as_dict(self) -> dict:
        return {"raw": self.raw, "normalized": self.normalized, "dim": self.dim, "bound": self.bound}


def cgp_unitary(u, tol: float = STRUCT_TOL) -> CgpResult:
    u = check_unitary(u, tol)
    d = u.shape[0]
    mod2 = u.real**2 + u.imag**2
    return CgpResult.from_raw((1.0 - np.sum(mod2**2) / d) / (d + 1), d)


def normalized_cgp_batch(us: np.ndarray) -> np.ndarray:
    """Normalized CGP of a stack of unitaries ``(n, d, d)``; no validation."""
    d = us.shape[-1]
    mod2 = us.real**2 + us.imag**2
    raw = (1.0 - np.sum(mod2**2, axis=(-2, -1)) / d) / (d + 1)
    return raw / max_cgp(d)


def cgp_channel(e) -> CgpResult:
    if not isinstance(e, KrausChannel):
        e = KrausChannel(e)
    a = e.kraus
    d = e.dim
    # images[i, l, m] = <l| E(|i><i|) |m>
    images = np.einsum("kli,kmi->ilm", a, a.conj())
    mod2 = images.real**2 + images.imag**2
    off = mod2.sum() - np.einsum("ill->", mod2)
    return CgpResult.from_raw(off / (d * (d + 1)), d)


def cgp_basis_changed(u, v, tol: float = STRUCT_TOL) -> CgpResult:
    """CGP of ``u`` with respect to the basis ``{V|i>}``, i.e. of ``V^dagger U V``."""
    u = check_unitary(u, tol, "u")
    v = check_unitary(v, tol, "v")
    if u.shape != v.shape:
        raise MatrixFormatError("u and v must have the same dimension")
    return cgp_unitary(v.conj().T @ u @ v, tol)


def is_mub_pair(u, tol: float = STRUCT_TOL) -> bool:
    """Whether the columns of ``u`` are unbiased w.r.t. the computational basis."""
    u = check_unitary(u, tol)
    d = u.shape[0]
    return bool(np.all(np.abs(np.abs(u) ** 2 - 1.0 / d) <= tol))


def simplex_grid(steps: int):
    """Barycentric grid with spacing ``1/steps``, lexicographic in ``(p1, p2)``."""
    if steps < 1:
        raise ValueError("grid_steps must be >= 1")
    for i in range(steps + 1):
        for j in range(steps + 1 - i):
            yield i / steps, j / steps, (steps - i - j) / steps


def mixture_scan(us, grid_steps: int) -> list[tuple[float, float, float, float]]:
    """Normalized CGP of ``sum_k p_k U_k . U_k^dagger`` over a grid on the 2-simplex.

    Returns rows ``(p1, p2, p3, normalized_cgp)``.
    """
    if len(us) != 3:
        raise ValueError("mixture_scan needs exactly three unitaries")
    us = [check_unitary(u, name=f"us[{k}]") for k, u in enumerate(us)]
    if len({u.shape for u in us}) != 1:
        raise MatrixFormatError("unitaries must share one dimension")
    rows = []
    for p in simplex_grid(grid_steps):
        res = cgp_channel(mixture_channel(us, p))
        rows.append((*p, res.normalized))
    return rows
