import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from cgpower.channels import ChannelError, KrausChannel, dephasing_channel, mixture_channel
from cgpower.coherence import (
    c_b,
    c_b_tilde,
    dephase,
    is_incoherent_channel,
    is_incoherent_unitary,
    q_project,
)
from cgpower.ensembles import haar_unitary, uniform_simplex
from cgpower.fixtures import fourier, hadamard, permutation_phase, random_permutation_phase
from cgpower.matrix_core import hs_inner, norm2_sq, projector

PLUS = np.array([1, 1]) / np.sqrt(2)


def random_state(d, rng):
    """Random full-rank density matrix (Ginibre)."""
    g = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    rho = g @ g.conj().T
    return rho / np.trace(rho).real


def random_matrix(d, rng):
    return rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))


def random_incoherent_channel(d, rng, k=3):
    us = [random_permutation_phase(d, int(rng.integers(2**31))) for _ in range(k)]
    return mixture_channel(us, uniform_simplex(k, rng))


def test_dephase_examples():
    x = np.diag([1.0, 2.0, 3.0])
    assert np.array_equal(dephase(x), x)
    assert np.allclose(dephase(projector(PLUS)), np.eye(2) / 2)
    rng = np.random.default_rng(0)
    x, y = random_matrix(4, rng), random_matrix(4, rng)
    assert abs(hs_inner(dephase(x), y - dephase(y))) <= 1e-12


def test_q_project_examples():
    assert np.array_equal(q_project(np.diag([1, 2])), np.zeros((2, 2)))
    x = random_matrix(3, np.random.default_rng(1))
    assert np.array_equal(q_project(q_project(x)), q_project(x))
    assert np.allclose(dephase(x) + q_project(x), x, atol=0)
    assert np.all(np.diag(q_project(x)) == 0)


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), d=st.integers(2, 6))
def test_dephase_is_orthogonal_projection(seed, d):
    rng = np.random.default_rng(seed)
    x, y = random_matrix(d, rng), random_matrix(d, rng)
    assert np.max(np.abs(dephase(dephase(x)) - dephase(x))) <= 1e-12
    assert abs(hs_inner(dephase(x), y) - hs_inner(x, dephase(y))) <= 1e-12
    assert abs(np.trace(dephase(x)) - np.trace(x)) <= 1e-12


def test_c_b_examples():
    assert c_b(np.diag([0.2, 0.3, 0.5])) == 0
    assert c_b(projector(PLUS)) == pytest.approx(0.5, abs=1e-15)
    rho = random_state(4, np.random.default_rng(2))
    assert c_b(dephase(rho)) == 0


def test_c_b_tilde_examples():
    assert c_b_tilde(np.diag([0.5, 0.5])) == 0
    assert c_b_tilde(projector(PLUS)) == pytest.approx(1, abs=1e-12)


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), d=st.integers(2, 6))
def test_c_b_identities(seed, d):
    rng = np.random.default_rng(seed)
    rho = random_state(d, rng)
    # Pythagoras for the orthogonal projection
    assert abs(c_b(rho) - (norm2_sq(rho) - norm2_sq(dephase(rho)))) <= 1e-12
    assert c_b_tilde(rho) <= np.sqrt(d * c_b(rho)) + 1e-12


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), d=st.integers(2, 6))
def test_monotone_under_unital_incoherent(seed, d):
    rng = np.random.default_rng(seed)
    e = random_incoherent_channel(d, rng)
    rho = random_state(d, rng)
    assert c_b(e(rho)) <= c_b(rho) + 1e-12


def test_c_b_rejects_invalid_state():
    with pytest.raises(ValueError):
        c_b(np.diag([1.0, 1.0]))


def test_incoherent_unitary_identity():
    sigma, eta = is_incoherent_unitary(np.eye(4))
    assert np.array_equal(sigma, np.arange(4)) and np.allclose(eta, 1)


def test_incoherent_unitary_shift_with_phases():
    shift = np.array([[0, 1], [1, 0]], dtype=complex)
    u = np.diag([1, 1j]) @ shift
    sigma, eta = is_incoherent_unitary(u)
    assert np.array_equal(sigma, [1, 0])
    assert sorted(eta, key=np.angle) == sorted([1, 1j], key=np.angle)
    # reconstructs U|j> = eta_j |sigma(j)>
    assert np.array_equal(permutation_phase(sigma, eta), u)


def test_incoherent_unitary_negative():
    assert is_incoherent_unitary(hadamard(2)) is None
    assert is_incoherent_unitary(haar_unitary(5, 0)) is None
    with pytest.raises(ValueError):
        is_incoherent_unitary(np.diag([1, 2]))


def test_incoherent_channel_examples():
    assert is_incoherent_channel(dephasing_channel(4))
    assert is_incoherent_channel(KrausChannel.from_unitary(random_permutation_phase(5, 3)))
    assert not is_incoherent_channel(KrausChannel.from_unitary(hadamard(2)))
    assert not is_incoherent_channel(KrausChannel.from_unitary(fourier(3)))


@pytest.mark.parametrize("d", range(2, 7))
def test_incoherent_unitary_implies_incoherent_channel(d):
    rng = np.random.default_rng(d)
    for _ in range(10):
        u = random_permutation_phase(d, int(rng.integers(2**31)))
        assert is_incoherent_unitary(u) is not None
        assert is_incoherent_channel(KrausChannel.from_unitary(u))


def test_channel_validation():
    with pytest.raises(ChannelError):
        KrausChannel([np.diag([1.0, 0.5])])
    # amplitude damping: trace preserving but not unital
    g = 0.3
    a0 = np.array([[1, 0], [0, np.sqrt(1 - g)]])
    a1 = np.array([[0, np.sqrt(g)], [0, 0]])
    with pytest.raises(ChannelError, match="unital"):
        KrausChannel([a0, a1])
    with pytest.raises(ValueError):
        mixture_channel([np.eye(2)], [0.5])


def test_channel_composition():
    rng = np.random.default_rng(4)
    e = mixture_channel([haar_unitary(3, rng), haar_unitary(3, rng)], [0.4, 0.6])
    t = random_incoherent_channel(3, rng)
    rho = random_state(3, rng)
    assert np.allclose(e.then(t)(rho), t(e(rho)), atol=1e-13)
