"""
KAK (Cartan) decomposition of two-qubit unitaries. The diagonalization runs in the
MAGIC_Q Bell basis rather than the Q' basis: conjugation by MAGIC_Q sends su(2) x su(2)
to real so(4) and G11, G22, G33 to diagonal matrices, which is all the algorithm needs.
Q' stays with the conjugation tables and the printed factorizations.
"""
import logging
import math
from dataclasses import dataclass

import numpy as np

from app.models.factorization import Factor, Factorization
from app.models.generator import GeneratorIndex
from app.models.matrix import as_matrix
from app.exceptions import ConvergenceError, OracleError
from app.services.cartan.factorization import MAGIC_Q, compose_factorization, composition_residual
from app.services.oracle.linalg import is_unitary
from app.services.oracle.pauli import pauli, pauli_string

logger = logging.getLogger(__name__)

G = GeneratorIndex

# mixing weights for the simultaneous diagonalization of Re(M) and Im(M)
_MIXING = (0.5396, 1.2379, 2.1417, 0.3183, 3.7071)


@dataclass(frozen=True)
class KakResult:
    factorization: Factorization
    coefficients: tuple
    canonical: tuple
    residual: float

    def to_dict(self):
        return {
            "factorization": self.factorization.to_dict(),
            "coefficients": list(self.coefficients),
            "canonical": list(self.canonical),
            "residual": self.residual,
        }


def kron_factor(m):
    """
    Split a 4x4 kron(A, B) into g * kron(f1, f2) with det f1 = det f2 = 1.
    """
    m = as_matrix(m)
    a, b = max(((i, j) for i in range(4) for j in range(4)), key=lambda t: abs(m[t]))
    f1 = np.zeros((2, 2), dtype=np.complex128)
    f2 = np.zeros((2, 2), dtype=np.complex128)
    for i in range(2):
        for j in range(2):
            f1[(a >> 1) ^ i, (b >> 1) ^ j] = m[a ^ (i << 1), b ^ (j << 1)]
            f2[(a & 1) ^ i, (b & 1) ^ j] = m[a ^ i, b ^ j]
    with np.errstate(divide="ignore", invalid="ignore"):
        f1 /= np.sqrt(np.linalg.det(f1)) or 1
        f2 /= np.sqrt(np.linalg.det(f2)) or 1
    g = m[a, b] / (f1[a >> 1, b >> 1] * f2[a & 1, b & 1])
    if np.real(g) < 0:
        f1 *= -1
        g = -g
    return g, f1, f2


def su2_log(f):
    """(a1, a2, a3) with f = exp(i a.sigma) for f in SU(2)."""
    c = float(np.real(np.trace(f))) / 2.0
    v = np.array([float(np.imag(np.trace(pauli(k) @ f))) / 2.0 for k in (1, 2, 3)])
    s = float(np.linalg.norm(v))
    if s < 1e-15:
        return (0.0, 0.0, 0.0) if c > 0 else (0.0, 0.0, math.pi)
    theta = math.atan2(s, c)
    return tuple(float(x) for x in theta * v / s)


def _real_eigenbasis(m, tol=1e-9):
    """Real orthogonal O with O^T M O diagonal, for M symmetric unitary."""
    for weight in _MIXING:
        _, o = np.linalg.eigh(np.real(m) + weight * np.imag(m))
        d = o.T @ m @ o
        if np.max(np.abs(d - np.diag(np.diag(d)))) <= tol:
            return o
        logger.debug("Eigenbasis with mixing weight %.4f left off-diagonal %.3g", weight, np.max(np.abs(d - np.diag(np.diag(d)))))
    raise ConvergenceError("Could not diagonalize U^T U with a real orthogonal basis")


def _local_factor(f1, f2):
    a = su2_log(f1)
    b = su2_log(f2)
    return Factor.of({
        G(1, 0): a[0], G(2, 0): a[1], G(3, 0): a[2],
        G(0, 1): b[0], G(0, 2): b[1], G(0, 3): b[2],
    })


def canonical_coefficients(c, atol=1e-9):
    """
    Representative of (c1, c2, c3) up to shifts by pi/2, permutations and paired sign
    flips: pi/4 >= x >= y >= |z|.
    """
    reduced = []
    for x in c:
        r = (x + math.pi / 4) % (math.pi / 2) - math.pi / 4
        if r < -math.pi / 4 + atol:
            r = math.pi / 4
        reduced.append(r)
    reduced.sort(key=abs, reverse=True)
    x, y, z = reduced
    if x < 0:
        x, z = -x, -z
    if y < 0:
        y, z = -y, -z
    if abs(x - math.pi / 4) <= atol and z < 0:
        z = -z
    return tuple(0.0 if abs(v) < atol else v for v in (x, y, z))


def kak_decompose(u, tol=1e-9, conv=None):
    """
    u = e^{i alpha} (A1 x B1) exp(c1 G11 + c2 G22 + c3 G33) (A2 x B2).

    Works in the Bell basis of MAGIC_Q, where local unitaries become real orthogonal:
    U^T U there is symmetric unitary, diagonalized by a real orthogonal O.
    """
    u = as_matrix(u)
    if u.shape != (4, 4) or not is_unitary(u, 1e-8):
        raise OracleError("kak_decompose needs a 4x4 unitary")
    phase0 = float(np.angle(np.linalg.det(u))) / 4.0
    v = u * np.exp(-1j * phase0)

    ub = MAGIC_Q.conj().T @ v @ MAGIC_Q
    o = _real_eigenbasis(ub.T @ ub)
    if np.linalg.det(o) < 0:
        o[:, 0] *= -1
    d = np.diag(o.T @ ub.T @ ub @ o)
    half = np.exp(0.5j * np.angle(d))
    a = ub @ o @ np.diag(1.0 / half)
    if np.max(np.abs(np.imag(a))) > 1e-7:
        raise ConvergenceError("Left factor in the Bell basis is not real")
    a = np.real(a)
    if np.linalg.det(a) < 0:
        half[0] = -half[0]
        a[:, 0] *= -1

    # diagonal of sigma_k x sigma_k in the Bell basis, entries +/-1
    lam = [np.real(np.diag(MAGIC_Q.conj().T @ pauli_string(k, k) @ MAGIC_Q)) for k in (1, 2, 3)]
    system = np.column_stack([np.ones(4), *lam])
    solution = np.linalg.solve(system, np.angle(half))
    middle_phase, coefficients = float(solution[0]), tuple(float(x) for x in solution[1:])

    k1 = MAGIC_Q @ a @ MAGIC_Q.conj().T
    k2 = MAGIC_Q @ o.T @ MAGIC_Q.conj().T
    g1, a1, b1 = kron_factor(k1)
    g2, a2, b2 = kron_factor(k2)
    alpha = phase0 + middle_phase + float(np.angle(g1)) + float(np.angle(g2))

    factorization = Factorization((
        _local_factor(a1, b1),
        Factor.of({G(1, 1): coefficients[0], G(2, 2): coefficients[1], G(3, 3): coefficients[2]}),
        _local_factor(a2, b2),
    ), phase=alpha, name="KAK")

    rotor, matrix = compose_factorization(factorization, conv)
    residual = max(float(np.max(np.abs(matrix - u))), composition_residual(rotor, matrix, conv))
    if residual > tol:
        logger.warning("KAK reconstruction residual %.3g exceeds %.3g", residual, tol)
    return KakResult(factorization, coefficients, canonical_coefficients(coefficients), residual)
