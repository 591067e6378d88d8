import logging

import numpy as np

from app.config import Config
from app.models.matrix import as_matrix
from app.exceptions import ConvergenceError, OracleError

logger = logging.getLogger(__name__)


def _square(a):
    a = as_matrix(a)
    if a.shape[0] != a.shape[1]:
        raise OracleError(f"Expected a square matrix, got {a.shape}")
    return a


def is_hermitian(a, tol=1e-10):
    a = _square(a)
    return bool(np.max(np.abs(a - a.conj().T)) <= tol)


def is_unitary(a, tol=1e-10):
    a = _square(a)
    return bool(np.max(np.abs(a.conj().T @ a - np.eye(a.shape[0]))) <= tol)


def expm(a, tol=None, max_terms=None):
    """
    Matrix exponential by scaling and squaring with a truncated Taylor series,
    the same scheme as the multivector exponential.
    """
    a = _square(a)
    tol = Config.EXP_SERIES_TOL if tol is None else tol
    max_terms = Config.EXP_MAX_TERMS if max_terms is None else max_terms
    n = a.shape[0]
    norm = float(np.sum(np.abs(a), axis=0).max()) if a.size else 0.0
    squarings = 0
    while norm / (2 ** squarings) > Config.EXP_SCALE_THRESHOLD:
        squarings += 1
    x = a / (2 ** squarings)

    total = np.eye(n, dtype=np.complex128)
    term = np.eye(n, dtype=np.complex128)
    for k in range(1, max_terms + 1):
        term = term @ x / k
        total = total + term
        if np.sum(np.abs(term)) < tol:
            break
    else:
        raise ConvergenceError(f"Matrix exp series did not reach {tol} within {max_terms} terms")

    for _ in range(squarings):
        total = total @ total
    return total


def eig_hermitian(a, tol=1e-10):
    """
    Ascending real eigenvalues and orthonormal eigenvectors of a Hermitian matrix.
    """
    a = _square(a)
    if not is_hermitian(a, tol):
        raise OracleError("eig_hermitian called on a non-Hermitian matrix")
    a = 0.5 * (a + a.conj().T)
    values, vectors = np.linalg.eigh(a)
    return values, vectors


def max_abs_diff(a, b):
    return float(np.max(np.abs(as_matrix(a) - as_matrix(b))))
