"""Unital Kraus channels."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .matrix_core import STRUCT_TOL, MatrixFormatError, as_square, check_unitary, norm2_sq


class ChannelError(ValueError):
    """Kraus operators do not define a trace-preserving unital map."""


@dataclass(frozen=True, eq=False)
class KrausChannel:
    """``E(X) = sum_k A_k X A_k^dagger``; validated trace-preserving and unital."""

    kraus: np.ndarray  # shape (K, d, d)
    tol: float = STRUCT_TOL

    def __post_init__(self):
        ops = [as_square(a, f"kraus[{k}]") for k, a in enumerate(self.kraus)]
        if not ops:
            raise ChannelError("a channel needs at least one Kraus operator")
        d = ops[0].shape[0]
        if any(a.shape != (d, d) for a in ops):
            raise MatrixFormatError("Kraus operators must all have the same dimension")
        ops = np.array(ops)
        eye = np.eye(d)
        tp = np.einsum("kji,kjl->il", ops.conj(), ops) - eye
        if np.sqrt(norm2_sq(tp)) > self.tol:
            raise ChannelError("Kraus operators are not trace preserving")
        un = np.einsum("kij,klj->il", ops, ops.conj()) - eye
        if np.sqrt(norm2_sq(un)) > self.tol:
            raise ChannelError("channel is not unital")
        ops.setflags(write=False)
        object.__setattr__(self, "kraus", ops)

    @property
    def dim(self) -> int:
        return self.kraus.shape[1]

    def __len__(self) -> int:
        return self.kraus.shape[0]

    def __call__(self, x) -> np.ndarray:
        """Apply to a matrix, or to a stack of matrices on the last two axes."""
        x = np.asarray(x, dtype=complex)
        a = self.kraus
        if x.ndim == 2:
            return np.einsum("kij,jl,kml->im", a, x, a.conj())
        out = np.zeros(x.shape, dtype=complex)
        for ak in a:
            out += ak @ x @ ak.conj().T
        return out

    def then(self, other: "KrausChannel") -> "KrausChannel":
        """The composition ``other o self`` (apply ``self`` first)."""
        if other.dim != self.dim:
            raise MatrixFormatError("channel dimensions differ")
        prod = np.einsum("jab,kbc->jkac", other.kraus, self.kraus).reshape(-1, self.dim, self.dim)
        return KrausChannel(prod, tol=max(self.tol, other.tol))

    @classmethod
    def from_unitary(cls, u, tol: float = STRUCT_TOL) -> "KrausChannel":
        u = check_unitary(u, tol)
        return cls(u[None], tol=tol)


def dephasing_channel(d: int) -> KrausChannel:
    """Full dephasing, Kraus operators ``|i><i|``."""
    ops = np.zeros((d, d, d), dtype=complex)
    ops[np.arange(d), np.arange(d), np.arange(d)] = 1.0
    return KrausChannel(ops)


def mixture_channel(us, ps, tol: float = STRUCT_TOL) -> KrausChannel:
    """Random-unitary channel ``sum_k p_k U_k . U_k^dagger`` with Kraus ``sqrt(p_k) U_k``."""
    ps = np.asarray(ps, dtype=float).ravel()
    if len(us) != len(ps):
        raise ValueError("need one probability per unitary")
    if np.any(ps < 0) or abs(ps.sum() - 1.0) > 1e-12:
        raise ValueError("probabilities must be nonnegative and sum to 1")
    us = [check_unitary(u, tol, f"us[{k}]") for k, u in enumerate(us)]
    keep = ps > 0
    ops = np.array([np.sqrt(p) * u for p, u, k in zip(ps, us, keep) if k])
    return KrausChannel(ops, tol=tol)
