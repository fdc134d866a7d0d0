"""Dense complex matrix helpers and the fixed two-copy constructions.

Matrices are plain ``numpy`` complex arrays. The preferred basis is always
the computational basis, so ``|i>`` is ``np.eye(d)[:, i]`` and two-copy
operators act on ``C^d (x) C^d`` with the row-major index ``i*d + j`` for
``|i, j>``.
"""

from __future__ import annotations

import numpy as np

STRUCT_TOL = 1e-10
EXACT_TOL = 1e-12
PSD_FLOOR = -1e-10


class MatrixFormatError(ValueError):
    """Raised when a matrix (or its JSON encoding) is malformed."""


def as_cmat(x, name: str = "matrix") -> np.ndarray:
    """Coerce to a finite 2-D complex array."""
    a = np.asarray(x, dtype=complex)
    if a.ndim != 2:
        raise MatrixFormatError(f"{name}: expected a 2-D array, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise MatrixFormatError(f"{name}: entries must be finite")
    return a


def as_square(x, name: str = "matrix") -> np.ndarray:
    a = as_cmat(x, name)
    if a.shape[0] != a.shape[1]:
        raise MatrixFormatError(f"{name}: expected a square matrix, got shape {a.shape}")
    return a


def kron(a, b) -> np.ndarray:
    return np.kron(as_cmat(a, "a"), as_cmat(b, "b"))


def hs_inner(x, y) -> complex:
    """Hilbert-Schmidt scalar product ``tr(x^dagger y)``."""
    x = as_square(x, "x")
    y = as_square(y, "y")
    if x.shape != y.shape:
        raise MatrixFormatError(f"dimension mismatch: {x.shape} vs {y.shape}")
    return complex(np.vdot(x, y))


def norm2_sq(x) -> float:
    """Squared Hilbert-Schmidt (Frobenius) norm."""
    x = as_square(x, "x")
    return float(np.sum(x.real**2 + x.imag**2))


def trace_norm(x) -> float:
    """Sum of singular values.

    Raises ``numpy.linalg.LinAlgError`` if the SVD does not converge.
    """
    x = as_square(x, "x")
    return float(np.sum(np.linalg.svd(x, compute_uv=False)))


def swap_operator(d: int) -> np.ndarray:
    r"""The swap ``S = \sum_{ij} |ij><ji|`` on ``C^d (x) C^d``."""
    if d < 1:
        raise ValueError("d must be >= 1")
    s = np.zeros((d * d, d * d), dtype=complex)
    i, j = np.divmod(np.arange(d * d), d)
    # S|i,j> = |j,i>
    s[j * d + i, i * d + j] = 1.0
    return s


def max_entangled(d: int) -> np.ndarray:
    r"""``|Phi+> = d^{-1/2} \sum_i |i>|i>`` as a length ``d**2`` vector."""
    if d < 1:
        raise ValueError("d must be >= 1")
    v = np.zeros(d * d, dtype=complex)
    v[np.arange(d) * (d + 1)] = 1.0 / np.sqrt(d)
    return v


def rho_b(d: int) -> np.ndarray:
    """Maximally classically correlated two-copy state ``(1/d) sum_i |ii><ii|``."""
    if d < 1:
        raise ValueError("d must be >= 1")
    diag = np.zeros(d * d)
    diag[np.arange(d) * (d + 1)] = 1.0 / d
    return np.diag(diag).astype(complex)


def projector(psi) -> np.ndarray:
    psi = np.asarray(psi, dtype=complex).ravel()
    return np.outer(psi, psi.conj())


def is_unitary(u, tol: float = STRUCT_TOL) -> bool:
    u = as_square(u, "u")
    err = u.conj().T @ u - np.eye(u.shape[0])
    return bool(np.sqrt(norm2_sq(err)) <= tol)


def is_hermitian(x, tol: float = EXACT_TOL) -> bool:
    x = as_square(x, "x")
    return bool(np.max(np.abs(x - x.conj().T), initial=0.0) <= tol)


def check_unitary(u, tol: float = STRUCT_TOL, name: str = "u") -> np.ndarray:
    u = as_square(u, name)
    if not is_unitary(u, tol):
        raise ValueError(f"{name} is not unitary within tolerance {tol:g}")
    return u


def check_density_matrix(rho, tol: float = EXACT_TOL, floor: float = PSD_FLOOR) -> np.ndarray:
    """Validate a density matrix (Hermitian, unit trace, PSD down to ``floor``)."""
    rho = as_square(rho, "rho")
    if not is_hermitian(rho, tol):
        raise ValueError("rho is not Hermitian")
    tr = np.trace(rho)
    if abs(tr - 1.0) > tol:
        raise ValueError(f"rho has trace {tr.real:.3g}, expected 1")
    if np.linalg.eigvalsh(rho).min() < floor:
        raise ValueError("rho is not positive semidefinite")
    return rho


# -- JSON encoding -----------------------------------------------------------

def matrix_to_json(x) -> dict:
    x = as_cmat(x)
    return {
        "d_rows": int(x.shape[0]),
        "d_cols": int(x.shape[1]),
        "re": x.real.tolist(),
        "im": x.imag.tolist(),
    }


def matrix_from_json(obj, name: str = "matrix") -> np.ndarray:
    """Decode ``{"d_rows", "d_cols", "re", "im"}``; errors name the bad field."""
    if not isinstance(obj, dict):
        raise MatrixFormatError(f"{name}: expected an object with d_rows, d_cols, re, im")
    for key in ("d_rows", "d_cols", "re", "im"):
        if key not in obj:
            raise MatrixFormatError(f"{name}: missing field '{key}'")
    rows, cols = obj["d_rows"], obj["d_cols"]
    for key, val in (("d_rows", rows), ("d_cols", cols)):
        if not isinstance(val, int) or isinstance(val, bool) or val < 1:
            raise MatrixFormatError(f"{name}: field '{key}' must be a positive integer")
    parts = {}
    for key in ("re", "im"):
        try:
            arr = np.array(obj[key], dtype=float)
        except (TypeError, ValueError):
            raise MatrixFormatError(f"{name}: field '{key}' must be a nested list of numbers") from None
        if arr.shape != (rows, cols):
            raise MatrixFormatError(
                f"{name}: field '{key}' has shape {arr.shape}, expected ({rows}, {cols})"
            )
        if not np.all(np.isfinite(arr)):
            raise MatrixFormatError(f"{name}: field '{key}' contains NaN or Inf")
        parts[key] = arr
    return parts["re"] + 1j * parts["im"]
