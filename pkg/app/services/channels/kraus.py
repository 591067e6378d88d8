import numpy as np

from app.models.channel import check_kraus_index
from app.models.multivector import Multivector
from app.models.signature import G6
from app.models.state import DensityOperator
from app.exceptions import NormalizationError
from app.services.algebra.products import geometric_product
from app.services.iso.translation import even_to_matrix, matrix_to_even
from app.services.oracle.pauli import pauli_string


def vec(m):
    """Column-stacking vectorization."""
    return np.asarray(m).T.reshape(-1)


def unvec(v, dim=4):
    return np.asarray(v).reshape(dim, dim).T


def kraus_linear(k, x):
    """x + 1/4 e_k (x - <x>_0) e_k on even elements of G(6,0)."""
    check_kraus_index(k)
    ek = Multivector.vector(G6, k)
    hat = x - x.scalar_part
    return x + geometric_product(geometric_product(ek, hat), ek).scale(0.25)


def kraus_apply(k, rho, tol=1e-9):
    value = rho.value if isinstance(rho, DensityOperator) else rho
    if value.sig != G6 or not value.is_even:
        raise NormalizationError("Kraus maps act on even elements of G(6,0)")
    if abs(value.scalar_part - 0.25) > tol:
        raise NormalizationError(f"Density operator has scalar part {value.scalar_part}, expected 1/4")
    return DensityOperator(kraus_linear(k, value))


def hermitian_basis():
    """sigma_a x sigma_b for a, b in 0..3."""
    return [pauli_string(a, b) for a in range(4) for b in range(4)]


def superoperator_of_map(fn, conv=None):
    """
    16x16 column-stacking superoperator of a real-linear, Hermiticity-preserving map of
    G+(6), extended complex-linearly from its action on the Hermitian Pauli basis.
    """
    s = np.zeros((16, 16), dtype=np.complex128)
    for h in hermitian_basis():
        image = even_to_matrix(fn(matrix_to_even(h, conv)), conv)
        s += np.outer(vec(image), vec(h).conj()) / 4.0
    return s


def superoperator_of(k, conv=None):
    check_kraus_index(k)
    return superoperator_of_map(lambda x: kraus_linear(k, x), conv)


def unitary_superoperator(u):
    """vec(U X U^dagger) = (conj(U) x U) vec(X)"""
    u = np.asarray(u, dtype=np.complex128)
    return np.kron(u.conj(), u)


def identity_superoperator():
    return np.eye(16, dtype=np.complex128)


def compose(*superoperators):
    """Left to right as written: compose(A, B) applies B first."""
    out = identity_superoperator()
    for s in superoperators:
        out = out @ s
    return out


def apply_superoperator(s, m):
    return unvec(s @ vec(m))
