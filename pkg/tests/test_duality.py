import pytest

from app.models.multivector import Multivector
from app.models.signature import G3, G6, Signature
from app.services.algebra.duality import cross_product, dual, dual_relations_check, g3_bivector_basis


def test_bivector_basis_duals():
    for index, plane in enumerate(g3_bivector_basis(), start=1):
        assert dual(plane) == -Multivector.vector(G3, index)


def test_cross_product_of_basis_vectors():
    e1, e2, e3 = (Multivector.vector(G3, k) for k in (1, 2, 3))
    assert cross_product(e1, e2) == e3
    assert cross_product(e2, e3) == e1
    assert cross_product(e3, e1) == e2
    assert cross_product(e2, e1) == -e3


def test_cross_product_needs_g3():
    with pytest.raises(ValueError):
        cross_product(Multivector.vector(G6, 1), Multivector.vector(G6, 2))


@pytest.mark.parametrize("sig", [G3, G6])
def test_dual_relations_pass(sig):
    report = dual_relations_check(sig, samples=20, seed=5)
    assert report.passed, [c.to_dict() for c in report.failures()]


def test_dual_relations_unknown_signature():
    with pytest.raises(ValueError):
        dual_relations_check(Signature(2, 0))
