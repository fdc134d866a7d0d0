"""CGP of Haar-random unitaries as a random variable."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import stats

from .cgp import max_cgp, normalized_cgp_batch
from .ensembles import haar_unitary_batch, map_blocks


@dataclass(frozen=True)
class DistributionSummary:
    """Summary of normalized CGP samples; ``histogram`` rows are ``(left, right, density)``."""

    dim: int
    n_samples: int
    mean: float
    variance: float
    std_error: float
    histogram: list
    seed: int

    @property
    def raw_mean(self) -> float:
        return self.mean * max_cgp(self.dim)

    @property
    def raw_std_error(self) -> float:
        return self.std_error * max_cgp(self.dim)

    def as_dict(self) -> dict:
        return {
            "dim": self.dim,
            "n_samples": self.n_samples,
            "mean": self.mean,
            "variance": self.variance,
            "std_error": self.std_error,
            "raw_mean": self.raw_mean,
            "raw_std_error": self.raw_std_error,
            "analytic_mean": analytic_normalized_mean(self.dim),
            "seed": self.seed,
        }


@dataclass(frozen=True)
class ScalingFit:
    dims: list
    variances: list
    exponent: float
    amplitude: float

    def as_dict(self) -> dict:
        return {
            "dims": list(self.dims),
            "variances": list(self.variances),
            "exponent": self.exponent,
            "amplitude": self.amplitude,
        }


def sample_normalized_cgp(d: int, n: int, seed: int = 0, workers: int | None = None) -> np.ndarray:
    """Normalized CGP of ``n`` Haar unitaries in dimension ``d``."""
    if d < 2:
        raise ValueError("d must be >= 2")
    return map_blocks(n, seed, lambda rng, m: normalized_cgp_batch(haar_unitary_batch(rng, d, m)), workers)


def histogram(values, bins: int = 100) -> list[tuple[float, float, float]]:
    """Density histogram over ``[0, 1]`` (counts / (n * width))."""
    if bins < 1:
        raise ValueError("bins must be >= 1")
    values = np.clip(np.asarray(values, dtype=float), 0.0, 1.0)
    dens, edges = np.histogram(values, bins=bins, range=(0.0, 1.0), density=True)
    return [(float(lo), float(hi), float(p)) for lo, hi, p in zip(edges[:-1], edges[1:], dens)]


def sample_cgp_distribution(
    d: int, n: int, seed: int = 0, bins: int = 100, workers: int | None = None
) -> DistributionSummary:
    values = sample_normalized_cgp(d, n, seed, workers)
    var = float(np.var(values, ddof=1)) if n > 1 else 0.0
    return DistributionSummary(
        dim=d,
        n_samples=n,
        mean=float(np.mean(values)),
        variance=var,
        std_error=float(np.sqrt(var / n)),
        histogram=histogram(values, bins),
        seed=seed,
    )


def analytic_mean(d: int) -> float:
    """Haar average of the raw CGP, ``(d - 1) / (d + 1)^2``."""
    if d < 1:
        raise ValueError("d must be >= 1")
    return (d - 1) / (d + 1) ** 2


def analytic_normalized_mean(d: int) -> float:
    return d / (d + 1.0)


def analytic_pdd_d2(c: float) -> float:
    """Density of the normalized CGP for Haar ``U`` in ``d = 2``."""
    if not 0.0 <= c < 1.0:
        raise ValueError("density is defined for 0 <= c < 1")
    return 0.5 / np.sqrt(1.0 - c)


def analytic_cdf_d2(c):
    c = np.clip(np.asarray(c, dtype=float), 0.0, 1.0)
    return 1.0 - np.sqrt(1.0 - c)


def ks_test_d2(samples) -> float:
    """Kolmogorov-Smirnov statistic of ``samples`` against ``F(c) = 1 - sqrt(1 - c)``."""
    samples = np.asarray(samples, dtype=float)
    if samples.size == 0:
        raise ValueError("need at least one sample")
    return float(stats.kstest(samples, analytic_cdf_d2).statistic)


def fit_power_law(dims, variances) -> ScalingFit:
    """Least squares of ``log v = log A - alpha log d``."""
    dims = [int(d) for d in dims]
    variances = [float(v) for v in variances]
    if len(set(dims)) < 3:
        raise ValueError("need at least 3 distinct dimensions")
    slope, intercept = np.polyfit(np.log(dims), np.log(variances), 1)
    return ScalingFit(dims=dims, variances=variances, exponent=float(-slope), amplitude=float(np.exp(intercept)))


def variance_scaling_fit(dims, n_per_dim: int, seed: int = 0, workers: int | None = None) -> ScalingFit:
    dims = [int(d) for d in dims]
    if len(set(dims)) < 3 or min(dims) < 2:
        raise ValueError("need at least 3 distinct dimensions, all >= 2")
    variances = []
    for d in dims:
        sub_seed = int(np.random.SeedSequence([seed, d]).generate_state(1)[0])
        variances.append(float(np.var(sample_normalized_cgp(d, n_per_dim, sub_seed, workers), ddof=1)))
    return fit_power_law(dims, variances)


def levy_bound(d: int) -> tuple[float, float]:
    """``(threshold, p)``: Prob(normalized CGP >= threshold) >= p for Haar ``U``."""
    if d < 2:
        raise ValueError("d must be >= 2")
    r = d ** (1.0 / 3.0)
    return 1.0 - 2.0 / r, 1.0 - np.exp(-r / 256.0)


def moments_summary(samples) -> tuple[float, float, float, float]:
    """Mean, unbiased variance, bias-corrected skewness and excess kurtosis.

    Shape moments are ``nan`` when the variance vanishes.
    """
    x = np.asarray(samples, dtype=float)
    if x.size < 2:
        raise ValueError("need at least 2 samples")
    mean = float(np.mean(x))
    var = float(np.var(x, ddof=1))
    if var == 0.0:
        return mean, 0.0, float("nan"), float("nan")
    skew = float(stats.skew(x, bias=False)) if x.size >= 3 else float("nan")
    kurt = float(stats.kurtosis(x, bias=False)) if x.size >= 4 else float("nan")
    return mean, var, skew, kurt
