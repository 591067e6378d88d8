from app.config import Config
from app.models.multivector import Multivector, blade_grade, blade_product
from app.exceptions import SignatureMismatchError


def _same_signature(a, b):
    if a.sig != b.sig:
        raise SignatureMismatchError(a.sig, b.sig)


def _accumulate(a, b, keep=None, prune=None):
    """
    Bilinear blade-by-blade product; `keep(ga, gb, g)` filters contributions by grade.
    """
    _same_signature(a, b)
    prune = Config.PRUNE_THRESHOLD if prune is None else prune
    out = {}
    for ma, ca in a:
        ga = blade_grade(ma)
        for mb, cb in b:
            m, sign = blade_product(ma, mb, a.sig)
            if keep is not None and not keep(ga, blade_grade(mb), blade_grade(m)):
                continue
            out[m] = out.get(m, 0.0) + sign * ca * cb
    return Multivector(a.sig, {m: c for m, c in out.items() if abs(c) >= prune})


def geometric_product(a, b):
    return _accumulate(a, b)


def outer_product(a, b):
    """Per grade pair, the grade r+s part of A_r B_s."""
    return _accumulate(a, b, keep=lambda r, s, g: g == r + s)


def inner_product(a, b):
    """
    Per grade pair, the grade |r-s| part of A_r B_s; pairs involving a scalar contribute 0.
    """
    return _accumulate(a, b, keep=lambda r, s, g: r > 0 and s > 0 and g == abs(r - s))


def grade_project(x, r):
    return x.grade(r)


def reverse(x):
    return Multivector(x.sig, {
        m: (-c if (blade_grade(m) * (blade_grade(m) - 1) // 2) % 2 else c) for m, c in x
    })


def grade_involute(x):
    return Multivector(x.sig, {m: (-c if blade_grade(m) % 2 else c) for m, c in x})


def commutator_half(a, b):
    """a x b = (ab - ba) / 2"""
    return (geometric_product(a, b) - geometric_product(b, a)).scale(0.5)


def scalar_product(a, b):
    return geometric_product(a, b).scalar_part
