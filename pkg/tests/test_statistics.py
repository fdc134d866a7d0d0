import numpy as np
import pytest
from scipy import integrate, stats

from cgpower.cgp import normalized_cgp_batch
from cgpower.ensembles import haar_unitaries
from cgpower.statistics import (
    analytic_mean,
    analytic_pdd_d2,
    fit_power_law,
    ks_test_d2,
    levy_bound,
    moments_summary,
    sample_cgp_distribution,
    sample_normalized_cgp,
    variance_scaling_fit,
)


def test_analytic_mean():
    assert analytic_mean(1) == 0
    assert analytic_mean(2) == pytest.approx(1 / 9)
    assert analytic_mean(100) == pytest.approx(99 / 10201)


def test_sample_d2_normalized_mean():
    s = sample_cgp_distribution(2, 100_000, seed=1)
    assert abs(s.mean - 2 / 3) <= 3 * s.std_error


def test_sample_d3_raw_mean():
    s = sample_cgp_distribution(3, 100_000, seed=2)
    assert abs(s.raw_mean - 1 / 8) <= 3 * s.raw_std_error


@pytest.mark.parametrize("d,bins", [(2, 100), (5, 37), (12, 1)])
def test_histogram_integrates_to_one(d, bins):
    s = sample_cgp_distribution(d, 5000, seed=d, bins=bins)
    assert len(s.histogram) == bins
    assert s.histogram[0][0] == 0 and s.histogram[-1][1] == 1
    assert all(p >= 0 for _, _, p in s.histogram)
    assert sum((hi - lo) * p for lo, hi, p in s.histogram) == pytest.approx(1, abs=1e-9)


def test_values_in_unit_interval():
    for d in (2, 3, 7, 16):
        c = sample_normalized_cgp(d, 20_000, seed=d)
        assert c.min() >= 0 and c.max() <= 1 + 1e-12


def test_analytic_pdd_d2():
    assert analytic_pdd_d2(0) == 0.5
    assert analytic_pdd_d2(0.75) == pytest.approx(1)
    val, _ = integrate.quad(analytic_pdd_d2, 0, 1, epsabs=1e-10, epsrel=1e-10)
    assert val == pytest.approx(1, abs=1e-8)
    with pytest.raises(ValueError):
        analytic_pdd_d2(1.0)


def test_ks_inverse_transform_samples():
    u = np.random.default_rng(0).random(100_000)
    c = 1 - (1 - u) ** 2  # inverse of F(c) = 1 - sqrt(1 - c)
    assert ks_test_d2(c) < 0.01


def test_ks_d2_cgp_samples():
    assert ks_test_d2(sample_normalized_cgp(2, 100_000, seed=7)) < 0.01


def test_ks_degenerate():
    assert ks_test_d2(np.zeros(100)) == pytest.approx(1)
    with pytest.raises(ValueError):
        ks_test_d2([])


def test_fit_recovers_exact_power_law():
    dims = [6, 10, 20, 40]
    fit = fit_power_law(dims, [0.37 / d**3 for d in dims])
    assert abs(fit.exponent - 3) <= 1e-10
    assert fit.amplitude == pytest.approx(0.37, rel=1e-9)


def test_fit_needs_three_dims():
    with pytest.raises(ValueError):
        variance_scaling_fit([2, 3], 100)
    with pytest.raises(ValueError):
        fit_power_law([2, 2, 3], [1, 1, 1])


def test_levy_bound():
    t, p = levy_bound(8)
    assert t == pytest.approx(0, abs=1e-15) and p == pytest.approx(1 - np.exp(-2 / 256))
    t, p = levy_bound(1000)
    assert t == pytest.approx(0.8) and p == pytest.approx(1 - np.exp(-10 / 256))


def test_levy_empirical_d40():
    c = sample_normalized_cgp(40, 10_000, seed=3)
    t, p = levy_bound(40)
    assert np.mean(c >= t) >= p


def test_moments_of_normal_samples():
    n = 100_000
    x = np.random.default_rng(1).standard_normal(n)
    mean, var, skew, kurt = moments_summary(x)
    assert abs(skew) <= 5 * np.sqrt(6 / n)
    assert abs(kurt) <= 5 * np.sqrt(24 / n)
    assert mean == pytest.approx(np.mean(x)) and var == pytest.approx(np.var(x, ddof=1))


def test_moments_constant_and_errors():
    mean, var, skew, kurt = moments_summary([2.0] * 10)
    assert mean == 2 and var == 0
    with pytest.raises(ValueError):
        moments_summary([1.0])


def test_moments_d40_near_gaussian():
    # pilot (n = 2e5): skew ~ -0.23, excess kurtosis ~ 0.13
    _, _, skew, kurt = moments_summary(sample_normalized_cgp(40, 10_000, seed=0))
    assert abs(skew) < 0.35
    assert abs(kurt) < 0.4


def test_basis_independence_of_distribution():
    # C_BV(U) = C_B(V^dagger U V) over the same Haar ensemble
    d, n = 4, 10_000
    v = haar_unitaries(d, 1, seed=99)[0]
    us = haar_unitaries(d, n, seed=10)
    a = normalized_cgp_batch(us)
    b = normalized_cgp_batch(v.conj().T @ us @ v)
    assert stats.ks_2samp(a, b).statistic < 0.02


def test_sampling_deterministic():
    a = sample_normalized_cgp(5, 9000, seed=3, workers=1)
    b = sample_normalized_cgp(5, 9000, seed=3, workers=4)
    assert np.array_equal(a, b)
