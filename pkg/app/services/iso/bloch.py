import numpy as np

from app.models.multivector import Multivector
from app.models.signature import G3
from app.exceptions import AlgebraError
from app.services.algebra.products import geometric_product, reverse
from app.services.iso.translation import g3_to_matrix


def reference_projector_g3():
    """P3 = (1 + e3)/2"""
    return (1.0 + Multivector.vector(G3, 3)).scale(0.5)


def _spinor(x):
    if x.sig != G3 or not x.is_even:
        raise AlgebraError("A one-qubit spinor is an even element of G(3,0)")
    return x


def bloch_vector(spinor):
    """b = Psi e3 Psi~"""
    spinor = _spinor(spinor)
    return geometric_product(geometric_product(spinor, Multivector.vector(G3, 3)), reverse(spinor)).grade(1)


def density_g3(spinor):
    """2 Psi P3 Psi~ = 1 + b for a unit spinor."""
    spinor = _spinor(spinor)
    return geometric_product(geometric_product(spinor, reference_projector_g3()), reverse(spinor)).scale(2.0)


def expectation(spinor, a):
    """<Psi~ a Psi P3>_0, which is half of <psi| a.sigma |psi>."""
    spinor = _spinor(spinor)
    inner = geometric_product(geometric_product(reverse(spinor), a), spinor)
    return geometric_product(inner, reference_projector_g3()).scalar_part


def spinor_column(spinor):
    """|psi> = first column of the Pauli image of Psi."""
    return g3_to_matrix(_spinor(spinor))[:, 0]


def expectation_matrix(spinor, a):
    """<psi| a.sigma |psi> evaluated with the Pauli representation."""
    psi = spinor_column(spinor)
    return float(np.real(np.vdot(psi, g3_to_matrix(a) @ psi)))
