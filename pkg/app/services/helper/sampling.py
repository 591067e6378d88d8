import math

import numpy as np

from app.config import Config
from app.models.multivector import Multivector, blade_grade


def make_rng(seed=None):
    """
    Seeded numpy Generator; every random draw in the package goes through one of these.

    :param seed: integer seed, Config.SEED when None
    """
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(Config.SEED if seed is None else seed)


def random_multivector(sig, rng, terms=None, grades=None):
    """
    Random multivector with coefficients uniform in [-1, 1].

    :param terms: number of distinct blades to populate, all of them when None
    :param grades: restrict blades to these grades
    """
    masks = [m for m in range(1 << sig.dim) if grades is None or blade_grade(m) in grades]
    if terms is not None and terms < len(masks):
        masks = sorted(rng.choice(masks, size=terms, replace=False).tolist())
    coeffs = rng.uniform(-1.0, 1.0, size=len(masks))
    return Multivector(sig, dict(zip(masks, coeffs.tolist())))


def random_vector(sig, rng):
    return random_multivector(sig, rng, grades={1})


def random_bivector(sig, rng, scale=1.0):
    return random_multivector(sig, rng, grades={2}).scale(scale)


def random_blade(sig, r, rng):
    """Outer product of r random vectors."""
    out = Multivector.scalar(sig, 1.0)
    for _ in range(r):
        out = out ^ random_vector(sig, rng)
    return out


def random_unitary(n, rng):
    z = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / math.sqrt(2)
    q, r = np.linalg.qr(z)
    d = np.diag(r)
    return q * (d / np.abs(d))


def random_su4(rng):
    u = random_unitary(4, rng)
    return u / np.linalg.det(u) ** 0.25


def random_schmidt_values(rng):
    """Eight values for rho, phi, phi1, phi2, theta1, theta2, tau, sigma with rho = 1."""
    angles = rng.uniform(-math.pi, math.pi, size=7)
    return [1.0] + angles.tolist()
