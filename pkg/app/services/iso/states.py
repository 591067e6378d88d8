import cmath
import logging
import math

import numpy as np

from app.config import Config
from app.models.generator import GeneratorIndex
from app.models.multivector import Multivector
from app.models.signature import G6
from app.models.state import DensityOperator, StateIdeal
from app.exceptions import NormalizationError
from app.services.algebra.exponential import exp_even
from app.services.algebra.products import geometric_product, reverse
from app.services.iso.generators import generator_bivector, pseudoscalar, reference_projector
from app.services.iso.translation import even_to_matrix

logger = logging.getLogger(__name__)

G = GeneratorIndex

PURITY_BOUNDS = (3 / 16, 3 / 32, 15 / 128)


def schmidt_spinor(p, conv=None):
    """
    rho e^{-I phi} e^{-phi1/2 G30 - phi2/2 G03} e^{-theta1/2 G20 - theta2/2 G02}
    e^{-tau/2 (G30 + G03)} e^{-sigma/2 G22}
    """
    g = lambda i, j: generator_bivector(G(i, j), conv)
    factors = [
        pseudoscalar().scale(-p.phi),
        g(3, 0).scale(-p.phi1 / 2) + g(0, 3).scale(-p.phi2 / 2),
        g(2, 0).scale(-p.theta1 / 2) + g(0, 2).scale(-p.theta2 / 2),
        (g(3, 0) + g(0, 3)).scale(-p.tau / 2),
        g(2, 2).scale(-p.sigma / 2),
    ]
    out = Multivector.scalar(G6, p.rho)
    for exponent in factors:
        out = geometric_product(out, exp_even(exponent))
    return out


def state_from_schmidt(p, conv=None):
    spinor = schmidt_spinor(p, conv)
    return StateIdeal(psi=geometric_product(spinor, reference_projector()), spinor=spinor)


def density_from_state(state, tol=1e-9):
    """
    rho = psi psi~, equal to Psi P Psi~ since P is idempotent and P~ = P. The state must
    be normalized (rho = 1 in its Schmidt parameters), so <rho>_0 = 1/4.
    """
    psi = state.psi if isinstance(state, StateIdeal) else state
    raw = geometric_product(psi, reverse(psi))
    scalar = raw.scalar_part
    if abs(scalar - 0.25) > tol:
        raise NormalizationError(f"State is not normalized: <psi psi~>_0 = {scalar}, expected 1/4")
    return DensityOperator(raw)


def mixture(densities, weights):
    """Convex combination of density operators."""
    weights = np.asarray(weights, dtype=float)
    if np.any(weights < 0) or not math.isclose(weights.sum(), 1.0, abs_tol=1e-12):
        raise NormalizationError("Mixture weights must be non-negative and sum to 1")
    out = Multivector.zero(G6)
    for d, w in zip(densities, weights):
        out = out + d.value.scale(float(w))
    return DensityOperator(out)


def purity_moments(rho, tol=1e-9):
    """
    Scalar parts of powers 2, 3, 4 of the traceless part rho - 1/4, with the bounds
    3/16, 3/32, 15/128 they must respect.
    """
    value = rho.value if isinstance(rho, DensityOperator) else rho
    if value.sig != G6 or not value.is_even:
        raise NormalizationError("Density operator must be an even element of G(6,0)")
    if abs(value.scalar_part - 0.25) > tol:
        raise NormalizationError(f"Density operator has scalar part {value.scalar_part}, expected 1/4")
    hat = value - 0.25
    square = geometric_product(hat, hat)
    cube = geometric_product(square, hat)
    fourth = geometric_product(square, square)
    moments = (square.scalar_part, cube.scalar_part, fourth.scalar_part)
    for m, bound in zip(moments, PURITY_BOUNDS):
        if m > bound + tol:
            logger.warning("Purity moment %.6g exceeds bound %.6g", m, bound)
    return moments


def _xlogx(x, log):
    return 0.0 if x <= 0.0 else x * log(x)


def _log_for(base):
    base = Config.ENTROPY_LOG_BASE if base is None else str(base)
    if base == "2":
        return math.log2
    if base == "e":
        return math.log
    raise ValueError(f"Unsupported log base {base!r}, use 'e' or '2'")


def entropy_printed(sigma, base=None):
    """
    -c log c - s log s with c = |cos(sigma/2)|, s = |sin(sigma/2)| and x log x -> 0 at 0.
    """
    log = _log_for(base)
    c = abs(math.cos(sigma / 2))
    s = abs(math.sin(sigma / 2))
    return -_xlogx(c, log) - _xlogx(s, log)


def entanglement_entropy(p, base=None):
    """Entropy of a Schmidt-form state by the printed formula; only sigma enters."""
    return entropy_printed(p.sigma, base)


def state_vector(state, conv=None):
    """First column of the matrix image of psi, i.e. Psi|00>."""
    psi = state.psi if isinstance(state, StateIdeal) else state
    return even_to_matrix(psi, conv)[:, 0]


def entropy_standard(state, base=None, conv=None):
    """Von Neumann entropy of either qubit, from the Schmidt coefficients of the matrix image."""
    log = _log_for(base)
    vector = state_vector(state, conv)
    norm = np.linalg.norm(vector)
    if norm == 0.0:
        raise NormalizationError("State has zero norm")
    singular = np.linalg.svd((vector / norm).reshape(2, 2), compute_uv=False)
    return -sum(_xlogx(float(l) ** 2, log) for l in singular)


def schmidt_state_vector(p):
    """The Hilbert-space Schmidt form written out directly in the computational basis."""
    c1, s1 = math.cos(p.theta1 / 2), math.sin(p.theta1 / 2)
    c2, s2 = math.cos(p.theta2 / 2), math.sin(p.theta2 / 2)
    u1, v1 = cmath.exp(-0.5j * p.phi1), cmath.exp(0.5j * p.phi1)
    u2, v2 = cmath.exp(-0.5j * p.phi2), cmath.exp(0.5j * p.phi2)
    a = np.array([c1 * u1, s1 * v1])
    b = np.array([c2 * u2, s2 * v2])
    a_perp = np.array([s1 * u1, -c1 * v1])
    b_perp = np.array([s2 * u2, -c2 * v2])
    return p.rho * cmath.exp(-1j * p.phi) * (
        math.cos(p.sigma / 2) * cmath.exp(-0.5j * p.tau) * np.kron(a, b)
        + math.sin(p.sigma / 2) * cmath.exp(0.5j * p.tau) * np.kron(a_perp, b_perp)
    )


def overlap_up_to_phase(u, v):
    """|<u|v>| / (|u| |v|); 1 when the vectors agree up to a global phase."""
    nu, nv = np.linalg.norm(u), np.linalg.norm(v)
    if nu == 0.0 or nv == 0.0:
        return 0.0
    return float(abs(np.vdot(u, v)) / (nu * nv))
