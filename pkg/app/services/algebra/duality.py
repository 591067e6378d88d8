from app.models.multivector import Multivector
from app.models.report import VerificationReport
from app.models.signature import G3, G6
from app.services.algebra.products import geometric_product, outer_product, reverse
from app.services.helper.sampling import make_rng, random_multivector, random_vector


def dual(x):
    """I x, the left multiplication by the unit pseudoscalar."""
    return geometric_product(Multivector.pseudoscalar(x.sig), x)


def cross_product(a, b):
    """G(3) cross product a x b = I~ (a ^ b)."""
    if a.sig != G3:
        raise ValueError(f"Cross product is defined in G(3,0), got G{a.sig}")
    return geometric_product(reverse(Multivector.pseudoscalar(G3)), outer_product(a, b))


def g3_bivector_basis():
    """E1 = e2e3, E2 = e3e1, E3 = e1e2."""
    return [
        Multivector.blade(G3, [2, 3]),
        Multivector.blade(G3, [3, 1]),
        Multivector.blade(G3, [1, 2]),
    ]


def dual_relations_check(sig=G3, samples=100, seed=None, tol=1e-12):
    """
    Pseudoscalar relations of G(3) (I E_l = -e_l, cross product via duality,
    centrality of I) or of G(6) (I^2 = -1, I central on the even part,
    grades 2 and 4 exchanged).
    """
    rng = make_rng(seed)
    report = VerificationReport(f"pseudoscalar relations in G{sig}")
    big_i = Multivector.pseudoscalar(sig)

    if sig == G3:
        worst = 0.0
        for index, plane in enumerate(g3_bivector_basis(), start=1):
            worst = max(worst, geometric_product(big_i, plane).max_abs_diff(-Multivector.vector(G3, index)))
        report.add("I E_l = -e_l", worst, tol)

        worst = 0.0
        for _ in range(samples):
            a, b = random_vector(G3, rng), random_vector(G3, rng)
            via_dual = cross_product(a, b)
            ca = [a[1 << k] for k in range(3)]
            cb = [b[1 << k] for k in range(3)]
            direct = Multivector(G3, {
                1: ca[1] * cb[2] - ca[2] * cb[1],
                2: ca[2] * cb[0] - ca[0] * cb[2],
                4: ca[0] * cb[1] - ca[1] * cb[0],
            })
            worst = max(worst, via_dual.max_abs_diff(direct))
        report.add("a x b = I~(a ^ b)", worst, tol)

        worst = 0.0
        for _ in range(samples):
            x = random_multivector(G3, rng)
            worst = max(worst, geometric_product(big_i, x).max_abs_diff(geometric_product(x, big_i)))
        report.add("I central", worst, tol)
        report.add("I^2 = -1", geometric_product(big_i, big_i).max_abs_diff(Multivector.scalar(G3, -1.0)), tol)
        return report

    if sig == G6:
        report.add("I^2 = -1", geometric_product(big_i, big_i).max_abs_diff(Multivector.scalar(G6, -1.0)), tol)
        central = 0.0
        exchange = 0.0
        for _ in range(samples):
            x = random_multivector(G6, rng, terms=12).even()
            central = max(central, geometric_product(big_i, x).max_abs_diff(geometric_product(x, big_i)))
            two = x.grade(2)
            image = geometric_product(big_i, two)
            exchange = max(exchange, (image - image.grade(4)).max_abs())
        report.add("I commutes with even elements", central, tol)
        report.add("I maps grade 2 to grade 4", exchange, tol)
        return report

    raise ValueError(f"No dual relations defined for G{sig}")
