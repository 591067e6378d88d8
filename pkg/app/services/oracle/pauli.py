import numpy as np

from app.models.matrix import as_matrix
from app.exceptions import OracleError

_PAULI = (
    np.array([[1, 0], [0, 1]], dtype=np.complex128),
    np.array([[0, 1], [1, 0]], dtype=np.complex128),
    np.array([[0, -1j], [1j, 0]], dtype=np.complex128),
    np.array([[1, 0], [0, -1]], dtype=np.complex128),
)


def pauli(k):
    """sigma_0 = identity, sigma_1..sigma_3 the Pauli matrices."""
    if k not in (0, 1, 2, 3):
        raise OracleError(f"Pauli index must be 0..3, got {k}")
    return _PAULI[k].copy()


def kron(a, b):
    a, b = as_matrix(a), as_matrix(b)
    return as_matrix(np.kron(a, b))


def matmul(a, b):
    a, b = as_matrix(a), as_matrix(b)
    if a.shape[1] != b.shape[0]:
        raise OracleError(f"Cannot multiply {a.shape} by {b.shape}")
    return a @ b


def dagger(a):
    return as_matrix(a).conj().T


def trace(a):
    a = as_matrix(a)
    if a.shape[0] != a.shape[1]:
        raise OracleError(f"Trace of non-square {a.shape}")
    return complex(np.trace(a))


def commutator_half_mat(a, b):
    """(AB - BA) / 2"""
    return 0.5 * (matmul(a, b) - matmul(b, a))


def pauli_string(i, j):
    """sigma_i (x) sigma_j"""
    return kron(pauli(i), pauli(j))
