from functools import lru_cache

from app.models.generator import GeneratorConvention, GeneratorIndex, all_generators
from app.models.multivector import Multivector
from app.models.signature import G6
from app.services.algebra.products import geometric_product
from app.services.oracle.pauli import pauli_string

# G(6,0) vectors 1..3 are e1..e3 (first qubit), 4..6 are f1..f3 (second qubit)
VECTOR_NAMES = ("e1", "e2", "e3", "f1", "f2", "f3")

# cyclic planes: G10 = e2e3, G20 = e3e1, G30 = e1e2
_PLANES = {1: (2, 3), 2: (3, 1), 3: (1, 2)}


def e(k):
    return Multivector.vector(G6, k)


def f(k):
    return Multivector.vector(G6, k + 3)


def vertices(g):
    """Ordered pair of G(6) vector indices whose product is +/- the generator."""
    if g.j == 0:
        a, b = _PLANES[g.i]
        return a, b
    if g.i == 0:
        a, b = _PLANES[g.j]
        return a + 3, b + 3
    return g.i, g.j + 3


@lru_cache(maxsize=None)
def generator_bivector(g, conv=None):
    """Bivector of G(6,0) for generator g under `conv` (the adopted convention by default)."""
    a, b = vertices(g)
    out = geometric_product(Multivector.vector(G6, a), Multivector.vector(G6, b))
    if g.is_local:
        return out
    if conv is None:
        from app.services.iso.verification import default_convention
        conv = default_convention()
    return out.scale(conv.sign(g.i, g.j))


@lru_cache(maxsize=None)
def _generator_matrix(g):
    return 1j * pauli_string(g.i, g.j)


def generator_matrix(g):
    """i (sigma_i (x) sigma_j)"""
    return _generator_matrix(g).copy()


def pseudoscalar():
    return Multivector.pseudoscalar(G6)


def bivector_from_coefficients(coefficients, conv=None):
    """{GeneratorIndex: coeff} -> sum of coeff * G."""
    out = Multivector.zero(G6)
    for g, c in coefficients.items():
        out = out + generator_bivector(g, conv).scale(c)
    return out


def generator_coefficients(x, conv=None):
    """
    Inverse of bivector_from_coefficients on the grade-2 part; each generator is +/- one blade.
    """
    two = x.grade(2)
    out = {}
    for g in all_generators():
        gb = generator_bivector(g, conv)
        ((mask, sign),) = gb.terms.items()
        out[g] = two[mask] * sign
    return out


def local_projector(qubit):
    """P3 of one qubit: (1 - I G30)/2 for the first, (1 - I G03)/2 for the second."""
    g = GeneratorIndex(3, 0) if qubit == 1 else GeneratorIndex(0, 3)
    return (1.0 - geometric_product(pseudoscalar(), generator_bivector(g))).scale(0.5)


def reference_projector():
    """P3^1 P3^2, the image of |00><00|."""
    return geometric_product(local_projector(1), local_projector(2))
