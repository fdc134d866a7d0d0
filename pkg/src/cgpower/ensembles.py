"""Seedable samplers: Haar unitaries, Haar states and the flat simplex.

Single draws take anything ``numpy.random.default_rng`` accepts (an int seed
or a ``Generator``). Batched draws take a master ``seed`` and are split into
fixed blocks of ``BLOCK_SIZE`` samples; block ``b`` gets its own stream from
``SeedSequence([seed, b])``. The block layout does not depend on the number
of workers, so serial and threaded runs give bit-identical output.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor

import numpy as np

BLOCK_SIZE = 4096


def block_rng(seed: int, block: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence([int(seed), int(block)]))


def default_workers() -> int:
    return os.cpu_count() or 1


def map_blocks(n: int, seed: int, fn, workers: int | None = None) -> np.ndarray:
    """Evaluate ``fn(rng, m)`` on each sample block and concatenate along axis 0.

    ``fn`` must return ``m`` leading-axis results for a block of ``m`` samples.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    blocks = [(b, min(BLOCK_SIZE, n - start)) for b, start in enumerate(range(0, n, BLOCK_SIZE))]

    def run(item):
        b, m = item
        return fn(block_rng(seed, b), m)

    workers = default_workers() if workers is None else max(1, int(workers))
    if workers == 1 or len(blocks) == 1:
        parts = [run(item) for item in blocks]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(run, blocks))
    return np.concatenate(parts, axis=0)


# -- raw batch draws from one generator ---------------------------------------

def ginibre(rng: np.random.Generator, shape) -> np.ndarray:
    """i.i.d. standard complex Gaussians (unit variance)."""
    return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2.0)


def haar_unitary_batch(rng: np.random.Generator, d: int, m: int) -> np.ndarray:
    """``m`` Haar unitaries of size ``d`` as an ``(m, d, d)`` array."""
    q, r = np.linalg.qr(ginibre(rng, (m, d, d)))
    diag = np.diagonal(r, axis1=-2, axis2=-1)
    # QR alone is not Haar: strip the phases of R's diagonal from Q's columns
    phases = diag / np.abs(diag)
    return q * phases[:, None, :]


def haar_state_batch(rng: np.random.Generator, d: int, m: int) -> np.ndarray:
    z = ginibre(rng, (m, d))
    return z / np.linalg.norm(z, axis=1, keepdims=True)


def uniform_simplex_batch(rng: np.random.Generator, d: int, m: int) -> np.ndarray:
    e = rng.standard_exponential((m, d))
    return e / e.sum(axis=1, keepdims=True)


def dephased_haar_batch(rng: np.random.Generator, d: int, m: int) -> np.ndarray:
    psi = haar_state_batch(rng, d, m)
    return psi.real**2 + psi.imag**2


# -- single draws ----------------------------------------------------------------

def _check_dim(d: int) -> None:
    if d < 1:
        raise ValueError("d must be >= 1")


def haar_unitary(d: int, rng=None) -> np.ndarray:
    _check_dim(d)
    return haar_unitary_batch(np.random.default_rng(rng), d, 1)[0]


def haar_state(d: int, rng=None) -> np.ndarray:
    _check_dim(d)
    return haar_state_batch(np.random.default_rng(rng), d, 1)[0]


def uniform_simplex(d: int, rng=None) -> np.ndarray:
    _check_dim(d)
    return uniform_simplex_batch(np.random.default_rng(rng), d, 1)[0]


def dephased_haar_diagonal(d: int, rng=None) -> np.ndarray:
    """Populations ``|<i|psi>|^2`` of a Haar state; distributed as the flat simplex."""
    _check_dim(d)
    return dephased_haar_batch(np.random.default_rng(rng), d, 1)[0]


# -- seeded batches ----------------------------------------------------------------

def haar_unitaries(d: int, n: int, seed: int = 0, workers: int | None = None) -> np.ndarray:
    _check_dim(d)
    return map_blocks(n, seed, lambda rng, m: haar_unitary_batch(rng, d, m), workers)


def haar_states(d: int, n: int, seed: int = 0, workers: int | None = None) -> np.ndarray:
    _check_dim(d)
    return map_blocks(n, seed, lambda rng, m: haar_state_batch(rng, d, m), workers)


def simplex_points(d: int, n: int, seed: int = 0, workers: int | None = None) -> np.ndarray:
    _check_dim(d)
    return map_blocks(n, seed, lambda rng, m: uniform_simplex_batch(rng, d, m), workers)


def dephased_haar_diagonals(d: int, n: int, seed: int = 0, workers: int | None = None) -> np.ndarray:
    _check_dim(d)
    return map_blocks(n, seed, lambda rng, m: dephased_haar_batch(rng, d, m), workers)


def compare_moments(a: np.ndarray, b: np.ndarray) -> dict:
    """First and second moments of two ``(n, d)`` samples with z-scores.

    Returns the means of ``p_i`` and of ``p_i p_j`` (``i <= j``) for both
    samples and ``|diff| / combined SE`` for every moment.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    d = a.shape[1]
    iu = np.triu_indices(d)

    def features(x):
        second = (x[:, :, None] * x[:, None, :])[:, iu[0], iu[1]]
        return np.concatenate([x, second], axis=1)

    fa, fb = features(a), features(b)
    mean_a, mean_b = fa.mean(axis=0), fb.mean(axis=0)
    se = np.sqrt(fa.var(axis=0, ddof=1) / len(fa) + fb.var(axis=0, ddof=1) / len(fb))
    z = np.abs(mean_a - mean_b) / se
    return {"mean_a": mean_a, "mean_b": mean_b, "se": se, "z": z}
