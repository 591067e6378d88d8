import itertools
import logging
from functools import lru_cache

import numpy as np

from app.models.generator import GeneratorConvention, GeneratorIndex, all_generators
from app.models.multivector import Multivector
from app.models.report import VerificationReport
from app.models.signature import G6
from app.services.algebra.products import commutator_half, geometric_product, reverse
from app.services.helper.sampling import make_rng, random_multivector
from app.services.iso.generators import (
    bivector_from_coefficients, generator_bivector, generator_matrix, pseudoscalar, reference_projector,
)
from app.services.iso.translation import blade_images, even_to_matrix, matrix_to_even
from app.services.oracle.pauli import commutator_half_mat

logger = logging.getLogger(__name__)

G = GeneratorIndex
_CYCLIC = ((1, 2, 3), (2, 3, 1), (3, 1, 2))


def _matrix_to_generators(m):
    """Generator coefficients of a matrix in su(4) and the residual outside the span."""
    coefficients = {}
    rebuilt = np.zeros((4, 4), dtype=np.complex128)
    for g in all_generators():
        mg = generator_matrix(g)
        c = float(np.real(np.trace(mg.conj().T @ m))) / 4.0
        coefficients[g] = c
        rebuilt += c * mg
    return coefficients, float(np.max(np.abs(m - rebuilt)))


def relation_families():
    """
    Bracket table of so(6) as six families of (a, b, (sign, c)) meaning a x b = sign * G_c;
    c is None when the bracket vanishes.
    """
    families = {
        "G_ik x G_ik = 0": [(g, g, (0, None)) for g in all_generators()],
        "G_ik x G_jl = 0 (i!=j, k!=l)": [
            (G(i, k), G(j, l), (0, None))
            for i, j, k, l in itertools.product((1, 2, 3), repeat=4) if i != j and k != l
        ],
        "G_1k x G_2k = -G_30 (cyclic)": [
            (G(p, k), G(q, k), (-1, G(r, 0))) for p, q, r in _CYCLIC for k in range(4)
        ],
        "G_i1 x G_i2 = -G_03 (cyclic)": [
            (G(i, p), G(i, q), (-1, G(0, r))) for p, q, r in _CYCLIC for i in range(4)
        ],
        "G_10 x G_2l = -G_3l (cyclic)": [
            (G(p, 0), G(q, l), (-1, G(r, l))) for p, q, r in _CYCLIC for l in (1, 2, 3)
        ],
        "G_01 x G_j2 = -G_j3 (cyclic)": [
            (G(0, p), G(j, q), (-1, G(j, r))) for p, q, r in _CYCLIC for j in (1, 2, 3)
        ],
    }
    return families


def verify_isomorphism(conv, tol=1e-12):
    """
    Sweep a convention: every bracket of generator pairs in G(6) against its matrix image,
    the six relation families on both sides, the products inside the two local families,
    and the anchors I -> i*Id and P3^1 P3^2 -> |00><00|.
    """
    report = VerificationReport(f"so(6) ~ su(4) isomorphism [{conv}]")
    gens = all_generators()
    bivectors = {g: generator_bivector(g, conv) for g in gens}
    matrices = {g: generator_matrix(g) for g in gens}

    worst = 0.0
    for a, b in itertools.product(gens, repeat=2):
        ga = commutator_half(bivectors[a], bivectors[b])
        coefficients, residual = _matrix_to_generators(commutator_half_mat(matrices[a], matrices[b]))
        back = bivector_from_coefficients(coefficients, conv)
        worst = max(worst, ga.max_abs_diff(back), residual)
    report.add("bracket sweep (225 pairs)", worst, tol)

    for name, instances in relation_families().items():
        dev = 0.0
        for a, b, (sign, c) in instances:
            expected_ga = Multivector.zero(G6) if c is None else bivectors[c].scale(sign)
            expected_mat = np.zeros((4, 4)) if c is None else sign * matrices[c]
            dev = max(
                dev,
                commutator_half(bivectors[a], bivectors[b]).max_abs_diff(expected_ga),
                float(np.max(np.abs(commutator_half_mat(matrices[a], matrices[b]) - expected_mat))),
            )
        report.add(name, dev, tol)

    dev = 0.0
    for family in ([G(1, 0), G(2, 0), G(3, 0)], [G(0, 1), G(0, 2), G(0, 3)]):
        for a, b in itertools.product(family, repeat=2):
            product = even_to_matrix(geometric_product(bivectors[a], bivectors[b]), conv)
            dev = max(dev, float(np.max(np.abs(product - matrices[a] @ matrices[b]))))
    report.add("local family products", dev, tol)

    images = blade_images(conv)
    stacked = np.array([np.concatenate([m.real.ravel(), m.imag.ravel()]) for m in images.values()])
    gram = stacked @ stacked.T / 4.0
    report.add("blade images orthonormal", float(np.max(np.abs(gram - np.eye(len(images))))), tol)

    report.add(
        "pseudoscalar -> i*Id",
        float(np.max(np.abs(even_to_matrix(pseudoscalar(), conv) - 1j * np.eye(4)))),
        tol,
    )
    big_i = pseudoscalar()
    printed = (1.0 - geometric_product(big_i, bivectors[G(3, 0)])
               - geometric_product(big_i, bivectors[G(0, 3)])
               - geometric_product(big_i, bivectors[G(3, 3)])).scale(0.25)
    report.add("P3^1 P3^2 = (1 - IG30 - IG03 - IG33)/4", reference_projector().max_abs_diff(printed), tol)
    ket00 = np.zeros((4, 4), dtype=np.complex128)
    ket00[0, 0] = 1.0
    report.add(
        "P3^1 P3^2 -> |00><00|",
        float(np.max(np.abs(even_to_matrix(reference_projector(), conv) - ket00))),
        tol,
    )
    report.data["convention"] = conv.to_dict()
    return report


def homomorphism_check(conv=None, samples=200, seed=None, tol=1e-10, round_trip_tol=1e-12):
    """
    Sampled checks of the translation on random even elements: products go to matrix
    products, reversion goes to the adjoint, and matrix_to_even undoes even_to_matrix.
    """
    rng = make_rng(seed)
    report = VerificationReport(f"even_to_matrix homomorphism ({samples} samples)")
    product = adjoint = round_trip = 0.0
    for _ in range(samples):
        a = random_multivector(G6, rng).even()
        b = random_multivector(G6, rng).even()
        ma = even_to_matrix(a, conv)
        lhs = even_to_matrix(geometric_product(a, b), conv)
        product = max(product, float(np.max(np.abs(lhs - ma @ even_to_matrix(b, conv)))))
        adjoint = max(adjoint, float(np.max(np.abs(even_to_matrix(reverse(a), conv) - ma.conj().T))))
        round_trip = max(round_trip, matrix_to_even(ma, conv).max_abs_diff(a))
    report.add("M(ab) = M(a) M(b)", product, tol)
    report.add("M(x~) = M(x)^dagger", adjoint, tol)
    report.add("matrix_to_even(M(x)) = x", round_trip, round_trip_tol)
    return report


@lru_cache(maxsize=None)
def adopt_convention(tol=1e-12):
    """
    Run verify_isomorphism on every candidate convention and return the first that passes,
    with all reports.
    """
    reports = []
    adopted = None
    for conv in GeneratorConvention.candidates():
        report = verify_isomorphism(conv, tol)
        reports.append(report)
        if report.passed and adopted is None:
            adopted = conv
            logger.debug("Adopted generator convention %s", conv)
        elif not report.passed:
            names = ", ".join(c.name for c in report.failures())
            logger.info("Rejected generator convention %s: %s", conv, names)
    if adopted is None:
        raise ArithmeticError("No generator convention satisfies the isomorphism checks")
    return adopted, tuple(reports)


def default_convention():
    return adopt_convention()[0]
