from functools import lru_cache

import numpy as np

from app.models.generator import all_generators
from app.models.matrix import as_matrix
from app.models.multivector import Multivector, blade_grade, blade_indices
from app.models.signature import G3, G6
from app.exceptions import AlgebraError, GradeError, OracleError
from app.services.iso.generators import generator_bivector, generator_matrix, vertices
from app.services.oracle.pauli import pauli

_EVEN_MASKS = tuple(m for m in range(1 << 6) if blade_grade(m) % 2 == 0)


def _resolve(conv):
    if conv is None:
        from app.services.iso.verification import default_convention
        return default_convention()
    return conv


@lru_cache(maxsize=None)
def _blade_images(conv):
    """
    Matrix image of each even blade of G(6), built by pairing its vectors in ascending
    order and multiplying the generator images of the pairs.
    """
    by_pair = {}
    for g in all_generators():
        ((mask, sign),) = generator_bivector(g, conv).terms.items()
        by_pair[frozenset(vertices(g))] = (g, sign)

    images = {}
    for mask in _EVEN_MASKS:
        idx = blade_indices(mask)
        image = np.eye(4, dtype=np.complex128)
        for a, b in zip(idx[0::2], idx[1::2]):
            g, sign = by_pair[frozenset((a, b))]
            # e_a e_b = sign * G for a < b
            image = image @ (sign * generator_matrix(g))
        images[mask] = image
    return images


def blade_images(conv=None):
    return dict(_blade_images(_resolve(conv)))


def even_to_matrix(x, conv=None):
    """Matrix image of an even element of G(6,0) in M4(C)."""
    if x.sig != G6:
        raise AlgebraError(f"even_to_matrix works on G(6,0), got G{x.sig}")
    if not x.is_even:
        raise GradeError(f"even_to_matrix needs an even element, got grades {x.grades()}")
    images = _blade_images(_resolve(conv))
    out = np.zeros((4, 4), dtype=np.complex128)
    for mask, coeff in x:
        out += coeff * images[mask]
    return out


def matrix_to_even(m, conv=None):
    """
    Inverse of even_to_matrix. The 32 blade images are orthonormal under
    Re tr(X^dagger Y)/4, so each coefficient is one inner product.
    """
    m = as_matrix(m)
    if m.shape != (4, 4):
        raise OracleError(f"matrix_to_even needs a 4x4 matrix, got {m.shape}")
    images = _blade_images(_resolve(conv))
    terms = {}
    for mask, image in images.items():
        terms[mask] = float(np.real(np.trace(image.conj().T @ m))) / 4.0
    return Multivector(G6, {k: c for k, c in terms.items() if abs(c) > 1e-15})


def scalar_as_trace(x, conv=None):
    """<x>_0 = Re tr(M(x)) / 4"""
    return float(np.real(np.trace(even_to_matrix(x, conv)))) / 4.0


def g3_to_matrix(x):
    """Pauli representation of G(3): e_k -> sigma_k, blades to ordered products."""
    if x.sig != G3:
        raise AlgebraError(f"g3_to_matrix works on G(3,0), got G{x.sig}")
    out = np.zeros((2, 2), dtype=np.complex128)
    for mask, coeff in x:
        image = np.eye(2, dtype=np.complex128)
        for k in blade_indices(mask):
            image = image @ pauli(k)
        out += coeff * image
    return out
