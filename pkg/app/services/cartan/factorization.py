import logging
import math
from collections import namedtuple
from dataclasses import dataclass

import numpy as np

from app.models.factorization import Factor, Factorization
from app.models.generator import GeneratorIndex, all_generators
from app.models.matrix import as_matrix
from app.models.multivector import Multivector
from app.models.signature import G6
from app.exceptions import OracleError
from app.services.algebra.exponential import exp_even
from app.services.algebra.products import geometric_product
from app.services.iso.generators import generator_bivector, generator_matrix, pseudoscalar
from app.services.iso.translation import even_to_matrix
from app.services.oracle.linalg import expm, is_unitary

logger = logging.getLogger(__name__)

G = GeneratorIndex

PhaseMatch = namedtuple("PhaseMatch", ["equivalent", "phase", "residual"])

_S = 1 / math.sqrt(2)

# Bell-basis change whose conjugation maps local unitaries onto SO(4)
MAGIC_Q = _S * np.array([
    [1, 0, 0, 1j],
    [0, 1j, 1, 0],
    [0, 1j, -1, 0],
    [1, 0, 0, -1j],
], dtype=np.complex128)

# real orthogonal companion, exp(pi/4 G21)
MAGIC_QPRIME = _S * np.array([
    [1, 0, 0, 1],
    [0, 1, 1, 0],
    [0, -1, 1, 0],
    [-1, 0, 0, 1],
], dtype=np.complex128)

SWAP = np.array([
    [1, 0, 0, 0],
    [0, 0, 1, 0],
    [0, 1, 0, 0],
    [0, 0, 0, 1],
], dtype=np.complex128)


def factor_exponent(factor, conv=None):
    """(even multivector, matrix) exponent of one factor."""
    ga = Multivector.zero(G6)
    mat = np.zeros((4, 4), dtype=np.complex128)
    for term in factor.terms:
        ga = ga + generator_bivector(term.g, conv).scale(term.coeff)
        mat = mat + term.coeff * generator_matrix(term.g)
    if factor.imaginary:
        ga = geometric_product(pseudoscalar(), ga)
        mat = 1j * mat
    return ga, mat


def compose_factorization(f, conv=None):
    """
    Multiply the factors in listed order, once with the multivector exponential and once
    with the matrix exponential.

    :return: (Multivector, matrix); their agreement is composition_residual
    """
    rotor = Multivector.scalar(G6, 1.0)
    if f.phase:
        rotor = exp_even(pseudoscalar().scale(f.phase))
    matrix = np.exp(1j * f.phase) * np.eye(4, dtype=np.complex128)
    for factor in f.factors:
        ga, mat = factor_exponent(factor, conv)
        rotor = geometric_product(rotor, exp_even(ga))
        matrix = matrix @ expm(mat)
    residual = composition_residual(rotor, matrix, conv)
    if residual > 1e-9:
        logger.warning("Factorization %s: multivector and matrix products differ by %.3g", f.name or "?", residual)
    return rotor, matrix


def composition_residual(rotor, matrix, conv=None):
    return float(np.max(np.abs(even_to_matrix(rotor, conv) - matrix)))


def phase_equivalent(u, v, tol=1e-10):
    """
    Whether u = e^{i alpha} v for unitaries u, v, with alpha = arg tr(v^dagger u).
    """
    u, v = as_matrix(u), as_matrix(v)
    if u.shape != v.shape:
        raise OracleError(f"Cannot compare {u.shape} with {v.shape}")
    if not (is_unitary(u, 1e-8) and is_unitary(v, 1e-8)):
        raise OracleError("phase_equivalent needs unitary matrices")
    overlap = np.trace(v.conj().T @ u)
    alpha = float(np.angle(overlap)) if abs(overlap) > 1e-12 else 0.0
    residual = float(np.max(np.abs(u - np.exp(1j * alpha) * v)))
    return PhaseMatch(residual <= tol, alpha, residual)


@dataclass(frozen=True)
class ConjugationEntry:
    source: GeneratorIndex
    target: GeneratorIndex = None
    sign: int = 0
    residual: float = 0.0

    @property
    def monomial(self):
        return self.target is not None

    def label(self):
        if not self.monomial:
            return "non-monomial"
        return ("-" if self.sign < 0 else "") + self.target.label

    def to_dict(self):
        return {"source": self.source.label, "image": self.label(), "residual": self.residual}


def conjugation_table(u, tol=1e-9):
    """
    u^dagger G u for each generator, matched to a single signed generator when possible.
    """
    u = as_matrix(u)
    if u.shape != (4, 4) or not is_unitary(u, 1e-8):
        raise OracleError("conjugation_table needs a 4x4 unitary")
    table = {}
    for g in all_generators():
        x = u.conj().T @ generator_matrix(g) @ u
        best, best_c = None, 0.0
        for h in all_generators():
            c = float(np.real(np.trace(generator_matrix(h).conj().T @ x))) / 4.0
            if abs(c) > abs(best_c):
                best, best_c = h, c
        residual = float(np.max(np.abs(x - best_c * generator_matrix(best))))
        if abs(abs(best_c) - 1.0) <= tol and residual <= tol:
            table[g] = ConjugationEntry(g, best, 1 if best_c > 0 else -1, residual)
        else:
            table[g] = ConjugationEntry(g, None, 0, residual)
    return table


def table_rows(table):
    """4x4 grid of labels, row i column j, with G00 in the corner."""
    rows = []
    for i in range(4):
        row = []
        for j in range(4):
            row.append("G00" if i == j == 0 else table[G(i, j)].label())
        rows.append(row)
    return rows


# Factorizations printed alongside the Bell-basis changes

def _cartan_angle():
    return 4 * math.pi / math.sqrt(27)


def cartan_q():
    t = _cartan_angle()
    return Factorization((
        Factor.of({G(0, 1): -t, G(0, 2): t, G(0, 3): -t}),
        Factor.of({G(1, 0): t, G(2, 0): -t, G(3, 0): t}),
        Factor.of({G(3, 3): math.pi / 4}),
        Factor.of({G(2, 0): math.pi / math.sqrt(8), G(3, 0): -math.pi / math.sqrt(8)}),
        Factor.of({G(0, 1): -t, G(0, 2): -t, G(0, 3): -t}),
    ), name="Q")


def cartan_qprime(reading="pseudoscalar"):
    """
    The printed Q' factorization carries a bare i in its second factor; `reading`
    takes it as the pseudoscalar or drops it.
    """
    if reading not in ("pseudoscalar", "dropped"):
        raise ValueError(f"Unknown reading {reading!r}")
    t = _cartan_angle()
    return Factorization((
        Factor.of({G(0, 1): -t, G(0, 2): -t, G(0, 3): -t}),
        Factor.of({G(1, 0): t, G(2, 0): t, G(3, 0): t}, imaginary=(reading == "pseudoscalar")),
        Factor.of({G(3, 3): math.pi / 4}),
        Factor.of({G(0, 1): t, G(0, 2): t, G(0, 3): t}),
        Factor.of({G(1, 0): -t, G(2, 0): -t, G(3, 0): -t}),
    ), name=f"Qprime[{reading}]")


def qprime_single():
    return Factorization((Factor.of({G(2, 1): math.pi / 4}),), name="Qprime=exp(pi/4 G21)")


def swap_factorization():
    q = math.pi / 4
    return Factorization((Factor.of({G(1, 1): q, G(2, 2): q, G(3, 3): q}),), name="SWAP")


def factorization_verdict(f, target, tol=1e-10, conv=None):
    """
    Compose f and compare with `target` up to a global phase; non-unitary products are
    reported as such.
    """
    rotor, matrix = compose_factorization(f, conv)
    out = {
        "name": f.name,
        "factorization": f.to_dict(),
        "composition_residual": composition_residual(rotor, matrix, conv),
        "unitary": is_unitary(matrix, 1e-8),
    }
    if not out["unitary"]:
        out.update(verdict="FAIL", phase=None, residual=float(np.max(np.abs(matrix - target))))
        return out
    match = phase_equivalent(matrix, target, tol)
    out.update(verdict="PASS" if match.equivalent else "FAIL", phase=match.phase, residual=match.residual)
    return out
