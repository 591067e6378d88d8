import logging
import math
from dataclasses import dataclass

from app.config import Config
from app.models.multivector import Multivector
from app.exceptions import ConvergenceError, GradeError, RotorError
from app.services.algebra.products import geometric_product, reverse

logger = logging.getLogger(__name__)


def exp_even(b, tol=None, max_terms=None):
    """
    Exponential of an even multivector by scaling and squaring.

    The element is halved until its coefficient 1-norm is at most
    Config.EXP_SCALE_THRESHOLD, the Taylor series is summed until a term's
    1-norm drops below `tol`, and the result is squared back up.

    :param b: even Multivector
    :param tol: series truncation tolerance, default Config.EXP_SERIES_TOL
    :param max_terms: iteration cap, default Config.EXP_MAX_TERMS
    :return: Multivector exp(b)
    """
    if not b.is_even:
        raise GradeError(f"exp_even needs an even element, got grades {b.grades()}")
    tol = Config.EXP_SERIES_TOL if tol is None else tol
    max_terms = Config.EXP_MAX_TERMS if max_terms is None else max_terms
    one = Multivector.scalar(b.sig, 1.0)
    norm = b.norm1()
    if norm == 0.0:
        return one

    squarings = 0
    while norm / (2 ** squarings) > Config.EXP_SCALE_THRESHOLD:
        squarings += 1
    x = b.scale(1.0 / (2 ** squarings))

    total = one
    term = one
    for k in range(1, max_terms + 1):
        term = geometric_product(term, x).scale(1.0 / k)
        total = total + term
        if term.norm1() < tol:
            break
    else:
        raise ConvergenceError(f"exp series did not reach tolerance {tol} within {max_terms} terms")

    for _ in range(squarings):
        total = geometric_product(total, total)
    logger.debug("exp_even: norm %.3g, %d squarings, %d terms", norm, squarings, k)
    return total


@dataclass(frozen=True)
class Rotor:
    """Even element with R R~ = 1."""
    value: Multivector

    def __post_init__(self):
        if not self.value.is_even:
            raise RotorError(f"Rotor must be even, got grades {self.value.grades()}")
        residual = geometric_product(self.value, reverse(self.value)) - 1.0
        if residual.max_abs() > 1e-10:
            raise RotorError(f"Rotor normalization off by {residual.max_abs():.3g}")

    @classmethod
    def from_bivector(cls, b, tol=None):
        if b.grades() not in ([], [2]):
            raise GradeError(f"Rotor generator must be a bivector, got grades {b.grades()}")
        return cls(exp_even(b, tol=tol))

    def conjugate(self, x):
        return rotor_conjugate(self, x)

    def __mul__(self, other):
        if isinstance(other, Rotor):
            return Rotor(geometric_product(self.value, other.value))
        return NotImplemented

    def reverse(self):
        return Rotor(reverse(self.value))


def rotor_conjugate(r, x):
    """R x R~"""
    value = r.value if isinstance(r, Rotor) else r
    return geometric_product(geometric_product(value, x), reverse(value))


def axis_rotor(axis, angle):
    """
    Right-handed rotation by `angle` about the G(3) vector `axis`:
    exp(-I axis angle/2) = cos(angle/2) - I axis sin(angle/2).
    """
    if axis.grades() != [1]:
        raise GradeError(f"Rotation axis must be a vector, got grades {axis.grades()}")
    length = math.sqrt(geometric_product(axis, axis).scalar_part)
    unit = axis.scale(1.0 / length)
    plane = geometric_product(Multivector.pseudoscalar(axis.sig), unit)
    return Rotor(exp_even(plane.scale(-angle / 2)))
