import json

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from cgpower.coherence import dephase
from cgpower.ensembles import haar_unitary
from cgpower.matrix_core import (
    MatrixFormatError,
    hs_inner,
    is_unitary,
    kron,
    matrix_from_json,
    matrix_to_json,
    max_entangled,
    norm2_sq,
    projector,
    rho_b,
    swap_operator,
    trace_norm,
)

SX = np.array([[0, 1], [1, 0]], dtype=complex)
SZ = np.array([[1, 0], [0, -1]], dtype=complex)


def random_hermitian(d, rng):
    a = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    return (a + a.conj().T) / 2


def random_matrix(d, rng):
    return rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))


def test_kron_examples():
    x = np.array([[1, 2j], [3, 4]])
    assert np.array_equal(kron(np.eye(1), x), x)
    assert np.array_equal(kron(np.eye(2), np.eye(2)), np.eye(4))
    assert np.array_equal(kron(np.diag([1, 2]), np.diag([3, 4])), np.diag([3, 4, 6, 8]))


def test_hs_inner():
    assert hs_inner(np.eye(5), np.eye(5)) == 5
    assert hs_inner(SX, SZ) == 0
    x = random_matrix(4, np.random.default_rng(0))
    val = hs_inner(x, x)
    assert val.imag == 0 and val.real >= 0
    assert np.isclose(val.real, norm2_sq(x))
    with pytest.raises(MatrixFormatError):
        hs_inner(np.eye(2), np.eye(3))


def test_norm2_sq():
    assert norm2_sq(np.eye(2)) == 2
    assert norm2_sq(np.zeros((3, 3))) == 0
    rng = np.random.default_rng(1)
    h = random_hermitian(3, rng)
    swap_side = np.trace(swap_operator(3) @ np.kron(h, h))
    assert abs(norm2_sq(h) - swap_side) <= 1e-10


@pytest.mark.parametrize("d", [2, 3, 4, 5])
def test_swap_trace_lemma(d):
    rng = np.random.default_rng(100 + d)
    s = swap_operator(d)
    for _ in range(50):
        x = random_hermitian(d, rng)
        assert abs(norm2_sq(x) - np.trace(s @ np.kron(x, x))) <= 1e-10


def test_trace_norm():
    assert trace_norm(np.diag([1, -2])) == pytest.approx(3)
    assert trace_norm(np.zeros((2, 2))) == 0
    assert trace_norm([[0, 0.5], [0.5, 0]]) == pytest.approx(1)


@settings(max_examples=30, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), d=st.integers(1, 6))
def test_norm_ordering(seed, d):
    x = random_matrix(d, np.random.default_rng(seed))
    assert trace_norm(x) >= np.sqrt(norm2_sq(x)) - 1e-12
    v = hs_inner(x, x)
    assert abs(v.imag) <= 1e-12 and v.real >= 0


def test_swap_operator_examples():
    assert np.array_equal(swap_operator(1), [[1]])
    s2 = swap_operator(2)
    expected = np.eye(4)[[0, 2, 1, 3]]
    assert np.array_equal(s2, expected)
    assert np.trace(swap_operator(5)) == 5


@pytest.mark.parametrize("d", range(2, 7))
def test_swap_squares_to_identity(d):
    s = swap_operator(d)
    assert np.max(np.abs(s @ s - np.eye(d * d))) <= 1e-12
    # S|i,j> = |j,i>
    e = np.eye(d)
    for i in range(d):
        for j in range(d):
            assert np.array_equal(s @ np.kron(e[i], e[j]), np.kron(e[j], e[i]))


def test_max_entangled():
    assert np.allclose(max_entangled(1), [1])
    assert np.allclose(max_entangled(2), np.array([1, 0, 0, 1]) / np.sqrt(2))
    for d in range(1, 8):
        assert np.linalg.norm(max_entangled(d)) == pytest.approx(1, abs=1e-12)


def test_rho_b():
    assert np.allclose(rho_b(2), np.diag([0.5, 0, 0, 0.5]))
    for d in range(1, 8):
        r = rho_b(d)
        assert np.trace(r) == pytest.approx(1, abs=1e-12)
        # dephasing both copies of |Phi+> = keeping the two-copy diagonal
        assert np.max(np.abs(r - dephase(projector(max_entangled(d))))) <= 1e-12


def test_is_unitary():
    assert is_unitary(np.eye(4))
    assert not is_unitary(np.diag([1, 2]))
    rng = np.random.default_rng(3)
    for _ in range(20):
        assert is_unitary(haar_unitary(8, rng), 1e-10)


def test_json_round_trip_bit_exact():
    x = haar_unitary(5, 9)
    obj = json.loads(json.dumps(matrix_to_json(x)))
    assert set(obj) == {"d_rows", "d_cols", "re", "im"}
    assert np.array_equal(matrix_from_json(obj), x)


@pytest.mark.parametrize(
    "obj, field",
    [
        ({"d_rows": 2, "d_cols": 2, "re": [[1, 0], [0, 1]]}, "im"),
        ({"d_rows": 2, "d_cols": 2, "re": [[1, 0]], "im": [[0, 0], [0, 0]]}, "re"),
        ({"d_rows": 2, "d_cols": 2, "re": [[1, float("nan")], [0, 1]], "im": [[0, 0], [0, 0]]}, "re"),
        ({"d_rows": 0, "d_cols": 2, "re": [], "im": []}, "d_rows"),
    ],
)
def test_json_errors_name_field(obj, field):
    with pytest.raises(MatrixFormatError, match=field):
        matrix_from_json(obj)
