import numpy as np
import pytest
import scipy.linalg

from app.exceptions import ConvergenceError, OracleError
from app.models.matrix import as_matrix, matrix_from_dict, matrix_to_dict
from app.services.helper.sampling import random_unitary
from app.services.oracle.linalg import eig_hermitian, expm, is_hermitian, is_unitary
from app.services.oracle.pauli import commutator_half_mat, dagger, kron, matmul, pauli, pauli_string, trace


def test_pauli_algebra():
    s1, s2, s3 = pauli(1), pauli(2), pauli(3)
    assert np.allclose(s1 @ s2, 1j * s3)
    assert np.allclose(commutator_half_mat(s1, s2), 1j * s3)
    for k in range(4):
        assert np.allclose(pauli(k) @ pauli(k), np.eye(2))
    with pytest.raises(OracleError):
        pauli(4)


def test_pauli_string_ordering():
    assert np.allclose(pauli_string(3, 0), np.diag([1, 1, -1, -1]))
    assert np.allclose(pauli_string(0, 3), np.diag([1, -1, 1, -1]))
    assert np.allclose(kron(pauli(1), pauli(0)), pauli_string(1, 0))


def test_shape_errors():
    with pytest.raises(OracleError):
        matmul(np.eye(2), np.eye(3))
    with pytest.raises(OracleError):
        trace(np.ones((2, 3)))
    with pytest.raises(OracleError):
        as_matrix(np.ones(4))
    with pytest.raises(OracleError):
        as_matrix(np.eye(32))


def test_trace_and_dagger():
    m = np.array([[1, 2j], [3, 4]])
    assert trace(m) == 5
    assert np.allclose(dagger(m), [[1, 3], [-2j, 4]])


def test_expm_against_scipy(rng):
    for n in (2, 4):
        for _ in range(5):
            a = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
            assert np.allclose(expm(a), scipy.linalg.expm(a), atol=1e-11)


def test_expm_of_pauli_rotation():
    theta = 0.3
    expected = np.cos(theta) * np.eye(2) + 1j * np.sin(theta) * pauli(2)
    assert np.allclose(expm(1j * theta * pauli(2)), expected, atol=1e-14)


def test_expm_series_cap():
    with pytest.raises(ConvergenceError):
        expm(pauli(1), max_terms=2)


def test_hermitian_and_unitary_predicates(rng):
    u = random_unitary(4, rng)
    assert is_unitary(u)
    assert not is_hermitian(u)
    h = u + u.conj().T
    assert is_hermitian(h)
    values, vectors = eig_hermitian(h)
    assert np.all(np.diff(values) >= 0)
    assert np.allclose(vectors @ np.diag(values) @ vectors.conj().T, h)
    with pytest.raises(OracleError):
        eig_hermitian(u)


def test_matrix_dict_round_trip_shape_check():
    m = np.array([[1, 1j], [0, -1]])
    assert np.array_equal(matrix_from_dict(matrix_to_dict(m)), m)
    with pytest.raises(OracleError):
        matrix_from_dict({"rows": 2, "cols": 2, "data": [[[1, 0], [0, 0]]]})
